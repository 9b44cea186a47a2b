#include "reltilt/atlas.hpp"

#include <deque>
#include <map>

namespace reltilt {

namespace {

Matrix stack_vectors(const std::vector<RepHom>& fs, std::size_t width) {
    Matrix m(0, width);
    for (const auto& f : fs) m.append_row(hom_to_vector(f));
    return m;
}

}  // namespace

ARSequence almost_split_sequence(const Representation& n) {
    ARSequence seq;
    seq.right = n;
    seq.left = tau(n);
    if (seq.left.is_zero()) throw ModuleError("almost split sequence requested for a projective module");
    const Representation& tn = seq.left;

    ProjectiveCover c0 = projective_cover(n);
    SubmoduleResult omega = kernel(c0.module, c0.map);
    const Representation& k = omega.module;
    const RepHom& iota = omega.inclusion;

    auto v = hom_basis(k, tn);
    std::size_t width = 0;
    for (std::size_t x = 0; x < k.dims.size(); ++x) width += k.dims[x] * tn.dims[x];

    std::vector<RepHom> restricted;
    for (const auto& g : hom_basis(c0.module, tn)) restricted.push_back(compose(iota, g));
    Complement q = complement_of(stack_vectors(restricted, width), width);

    // Lift each radical endomorphism of N to P0, then restrict it to the syzygy.
    auto end_n = hom_basis(n, n);
    auto rad_n = endomorphism_radical(n, end_n);
    auto end_p0 = hom_basis(c0.module, c0.module);
    std::size_t wn = 0;
    for (std::size_t x = 0; x < n.dims.size(); ++x) wn += c0.module.dims[x] * n.dims[x];
    std::vector<RepHom> through;
    for (const auto& b : end_p0) through.push_back(compose(b, c0.map));
    Matrix through_m = stack_vectors(through, wn);

    Matrix conditions(v.size(), 0);
    for (const auto& r : rad_n) {
        RepHom target = compose(c0.map, r);
        Matrix tv(0, wn);
        tv.append_row(hom_to_vector(target));
        auto coeff = solve_left(through_m, tv);
        if (!coeff) throw ModuleError("internal: endomorphism does not lift to the projective cover");
        RepHom r0 = zero_hom(c0.module, c0.module);
        for (std::size_t i = 0; i < end_p0.size(); ++i)
            if ((*coeff)(0, i)) r0 = hom_add(r0, hom_scale(end_p0[i], (*coeff)(0, i)));
        RepHom shifted = compose(iota, r0);
        RepHom r1;
        for (std::size_t x = 0; x < k.dims.size(); ++x) {
            if (k.dims[x] == 0) {
                r1.comps.emplace_back(0, 0);
                continue;
            }
            auto s = solve_left(iota.comps[x], shifted.comps[x]);
            if (!s) throw ModuleError("internal: lifted endomorphism does not preserve the syzygy");
            r1.comps.push_back(*s);
        }
        Matrix block(0, q.quotient.cols());
        for (const auto& h : v) {
            Matrix row(0, width);
            row.append_row(hom_to_vector(compose(r1, h)));
            block = Matrix::vstack(block, row * q.quotient);
        }
        conditions = Matrix::hstack(conditions, block);
    }
    Matrix socle = conditions.cols() == 0 ? Matrix::identity(v.size()) : left_kernel(conditions);
    std::optional<RepHom> phi;
    for (std::size_t r = 0; r < socle.rows() && !phi; ++r) {
        RepHom cand = zero_hom(k, tn);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (socle(r, i)) cand = hom_add(cand, hom_scale(v[i], socle(r, i)));
        Matrix cv(0, width);
        cv.append_row(hom_to_vector(cand));
        if (!(cv * q.quotient).is_zero()) phi = cand;
    }
    if (!phi) throw ModuleError("no almost split extension found (is the module indecomposable?)");

    // Pushout of 0 -> K -> P0 -> N -> 0 along phi.
    Representation sum = direct_sum(c0.module, tn);
    RepHom into;
    for (std::size_t x = 0; x < k.dims.size(); ++x)
        into.comps.push_back(Matrix::hstack(iota.comps[x], phi->comps[x].scaled(fp::neg(1))));
    seq.middle = cokernel(sum, into).module;
    if (seq.middle.total_dim() != n.total_dim() + tn.total_dim())
        throw ModuleError("internal: almost split sequence has the wrong middle dimension");
    return seq;
}

std::string dim_vector_label(const std::vector<std::size_t>& dims) {
    bool wide = false;
    for (auto d : dims) wide = wide || d > 9;
    std::string s;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (wide && i) s += ",";
        s += std::to_string(dims[i]);
    }
    return s;
}

std::optional<std::size_t> Atlas::find(const Representation& m) const {
    for (std::size_t i = 0; i < modules.size(); ++i)
        if (modules[i].dims == m.dims && isomorphic_indecomposables(modules[i], m)) return i;
    return std::nullopt;
}

std::vector<std::size_t> Atlas::locate_summands(const Representation& m) const {
    std::vector<std::size_t> out;
    for (const auto& s : decompose(m)) {
        auto i = find(s);
        if (!i) throw ModuleError("summand with dimension vector " + dim_vector_label(s.dims) + " is not in the atlas");
        out.push_back(*i);
    }
    return out;
}

Atlas knit_atlas(AlgebraPtr alg, std::size_t budget) {
    Atlas at;
    at.alg = alg;
    auto add = [&](const Representation& m) -> bool {
        if (at.find(m)) return true;
        if (at.modules.size() >= budget) {
            at.complete = false;
            return false;
        }
        at.modules.push_back(m);
        return true;
    };
    for (int v = 0; v < int(alg->vertex_count()); ++v) add(projective_module(alg, v));
    for (std::size_t idx = 0; idx < at.modules.size(); ++idx) {
        const Representation m = at.modules[idx];
        std::vector<Representation> next;
        if (is_injective(m)) {
            next = decompose(quotient(m, socle_subspaces(m)).module);
        } else {
            Representation n = tau_inverse(m);
            ARSequence seq = almost_split_sequence(n);
            next = decompose(seq.middle);
            next.push_back(n);
        }
        for (const auto& x : next)
            if (!add(x)) break;
        if (!at.complete) break;
    }
    std::map<std::string, int> seen;
    for (const auto& m : at.modules) {
        std::string base = dim_vector_label(m.dims);
        int k = ++seen[base];
        at.labels.push_back(k == 1 ? base : base + "#" + std::to_string(k));
    }
    return at;
}

}  // namespace reltilt
