#include "reltilt/representation.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "reltilt/poly.hpp"

namespace reltilt {

namespace {

// Position of each basis path inside its e_s A e_t block.
std::vector<std::size_t> block_positions(const Algebra& alg) {
    std::vector<std::size_t> pos(alg.dim(), 0);
    const int n = int(alg.vertex_count());
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            const auto& b = alg.paths_between(s, t);
            for (std::size_t k = 0; k < b.size(); ++k) pos[b[k]] = k;
        }
    return pos;
}

std::size_t arrow_basis_index(const Algebra& alg, int a) {
    const Arrow& ar = alg.quiver().arrows[a];
    auto idx = alg.index_of(Path{ar.source, ar.target, {a}});
    if (!idx) throw AlgebraError("internal: arrow is not a basis path");
    return *idx;
}

void require_same_algebra(const Representation& m, const Representation& n) {
    if (m.alg != n.alg) throw ModuleError("modules live over different algebras");
}

}  // namespace

std::size_t Representation::total_dim() const {
    std::size_t s = 0;
    for (auto d : dims) s += d;
    return s;
}

std::vector<std::size_t> Representation::offsets() const {
    std::vector<std::size_t> off(dims.size(), 0);
    for (std::size_t v = 1; v < dims.size(); ++v) off[v] = off[v - 1] + dims[v - 1];
    return off;
}

Representation zero_module(AlgebraPtr alg) {
    Representation m;
    m.dims.assign(alg->vertex_count(), 0);
    m.maps.assign(alg->quiver().arrows.size(), Matrix(0, 0));
    m.alg = std::move(alg);
    return m;
}

Representation simple_module(AlgebraPtr alg, int v) {
    Representation m = zero_module(alg);
    m.dims[v] = 1;
    const auto& arrows = alg->quiver().arrows;
    for (std::size_t a = 0; a < arrows.size(); ++a) m.maps[a] = Matrix(m.dims[arrows[a].source], m.dims[arrows[a].target]);
    return m;
}

Representation projective_module(AlgebraPtr alg, int v) {
    const Algebra& A = *alg;
    auto pos = block_positions(A);
    Representation m;
    const int n = int(A.vertex_count());
    m.dims.resize(n);
    for (int w = 0; w < n; ++w) m.dims[w] = A.paths_between(v, w).size();
    const auto& arrows = A.quiver().arrows;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const int i = arrows[a].source, j = arrows[a].target;
        Matrix mat(m.dims[i], m.dims[j]);
        const std::size_t ai = arrow_basis_index(A, int(a));
        const auto& rows = A.paths_between(v, i);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [k, c] : A.product(rows[r], ai)) mat(r, pos[k]) = fp::add(mat(r, pos[k]), c);
        m.maps.push_back(std::move(mat));
    }
    m.alg = std::move(alg);
    return m;
}

Representation injective_module(AlgebraPtr alg, int v) {
    const Algebra& A = *alg;
    auto pos = block_positions(A);
    Representation m;
    const int n = int(A.vertex_count());
    m.dims.resize(n);
    for (int w = 0; w < n; ++w) m.dims[w] = A.paths_between(w, v).size();
    const auto& arrows = A.quiver().arrows;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const int i = arrows[a].source, j = arrows[a].target;
        Matrix mat(m.dims[i], m.dims[j]);
        const std::size_t ai = arrow_basis_index(A, int(a));
        const auto& cols = A.paths_between(j, v);
        // phi_p |-> sum_q [coefficient of p in a q] phi_q
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [k, coef] : A.product(ai, cols[c])) mat(pos[k], c) = fp::add(mat(pos[k], c), coef);
        m.maps.push_back(std::move(mat));
    }
    m.alg = std::move(alg);
    return m;
}

Representation direct_sum(const std::vector<Representation>& parts) {
    if (parts.empty()) throw ModuleError("direct_sum of an empty family needs an algebra");
    Representation r = zero_module(parts.front().alg);
    const auto& arrows = r.alg->quiver().arrows;
    for (const auto& p : parts) {
        require_same_algebra(r, p);
        for (std::size_t v = 0; v < r.dims.size(); ++v) r.dims[v] += p.dims[v];
    }
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts) blocks.push_back(p.maps[a]);
        r.maps[a] = Matrix::block_diag(blocks);
        if (r.maps[a].rows() != r.dims[arrows[a].source] || r.maps[a].cols() != r.dims[arrows[a].target])
            r.maps[a] = Matrix(r.dims[arrows[a].source], r.dims[arrows[a].target]);
    }
    return r;
}

Representation direct_sum(const Representation& a, const Representation& b) { return direct_sum(std::vector{a, b}); }

Representation dual_module(const Representation& m) {
    Representation d;
    d.alg = m.alg->opposite();
    d.dims = m.dims;
    for (const auto& mat : m.maps) d.maps.push_back(mat.transpose());
    return d;
}

RepHom dual_hom(const RepHom& f) {
    RepHom d;
    for (const auto& c : f.comps) d.comps.push_back(c.transpose());
    return d;
}

void validate_module(const Representation& m) {
    if (!m.alg) throw ModuleError("module has no algebra");
    const Algebra& A = *m.alg;
    if (m.dims.size() != A.vertex_count()) throw ModuleError("dimension vector has the wrong length");
    const auto& arrows = A.quiver().arrows;
    if (m.maps.size() != arrows.size()) throw ModuleError("wrong number of arrow maps");
    for (std::size_t a = 0; a < arrows.size(); ++a)
        if (m.maps[a].rows() != m.dims[arrows[a].source] || m.maps[a].cols() != m.dims[arrows[a].target])
            throw ModuleError("arrow map for '" + arrows[a].id + "' has the wrong shape");
    for (std::size_t r = 0; r < A.relations().size(); ++r) {
        const auto& rel = A.relations()[r];
        const int s = arrows[rel.front().arrows.front()].source;
        const int t = arrows[rel.front().arrows.back()].target;
        Matrix acc(m.dims[s], m.dims[t]);
        for (const auto& term : rel) {
            Path p{s, t, term.arrows};
            acc = acc + path_action(m, p).scaled(fp::from_int(term.coeff));
        }
        if (!acc.is_zero()) throw ModuleError("module violates relation " + std::to_string(r));
    }
}

std::vector<std::size_t> dim_vector(const Representation& m) { return m.dims; }

Matrix path_action(const Representation& m, const Path& p) {
    Matrix r = Matrix::identity(m.dims[p.source]);
    for (int a : p.arrows) r = r * m.maps[a];
    return r;
}

Matrix element_action(const Representation& m, const Element& x, int from, int to) {
    const Algebra& A = *m.alg;
    Matrix r(m.dims[from], m.dims[to]);
    for (std::size_t k : A.paths_between(from, to)) {
        if (x[k] == 0) continue;
        r = r + path_action(m, A.basis(k)).scaled(x[k]);
    }
    return r;
}

RepHom zero_hom(const Representation& m, const Representation& n) {
    RepHom f;
    for (std::size_t v = 0; v < m.dims.size(); ++v) f.comps.emplace_back(m.dims[v], n.dims[v]);
    return f;
}

RepHom identity_hom(const Representation& m) {
    RepHom f;
    for (auto d : m.dims) f.comps.push_back(Matrix::identity(d));
    return f;
}

RepHom compose(const RepHom& f, const RepHom& g) {
    if (f.comps.size() != g.comps.size()) throw DimensionError("compose: vertex count mismatch");
    RepHom h;
    for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(f.comps[v] * g.comps[v]);
    return h;
}

RepHom hom_add(const RepHom& f, const RepHom& g) {
    RepHom h;
    for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(f.comps[v] + g.comps[v]);
    return h;
}

RepHom hom_scale(const RepHom& f, Scalar c) {
    RepHom h;
    for (const auto& m : f.comps) h.comps.push_back(m.scaled(c));
    return h;
}

bool hom_is_zero(const RepHom& f) {
    for (const auto& m : f.comps)
        if (!m.is_zero()) return false;
    return true;
}

bool is_homomorphism(const Representation& m, const Representation& n, const RepHom& f) {
    if (f.comps.size() != m.dims.size()) return false;
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        if (f.comps[v].rows() != m.dims[v] || f.comps[v].cols() != n.dims[v]) return false;
    const auto& arrows = m.alg->quiver().arrows;
    for (std::size_t a = 0; a < arrows.size(); ++a)
        if (m.maps[a] * f.comps[arrows[a].target] != f.comps[arrows[a].source] * n.maps[a]) return false;
    return true;
}

std::vector<Scalar> hom_to_vector(const RepHom& f) {
    std::vector<Scalar> v;
    for (const auto& m : f.comps)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

RepHom hom_from_vector(const Representation& m, const Representation& n, const std::vector<Scalar>& vec) {
    RepHom f;
    std::size_t k = 0;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        Matrix c(m.dims[v], n.dims[v]);
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = vec.at(k++);
        f.comps.push_back(std::move(c));
    }
    if (k != vec.size()) throw DimensionError("hom_from_vector: length mismatch");
    return f;
}

std::vector<RepHom> hom_basis(const Representation& m, const Representation& n) {
    require_same_algebra(m, n);
    const std::size_t nv = m.dims.size();
    std::vector<std::size_t> off(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + m.dims[v] * n.dims[v];
    const std::size_t nvars = off[nv];
    if (nvars == 0) return {};
    const auto& arrows = m.alg->quiver().arrows;
    std::size_t neq = 0;
    for (const auto& a : arrows) neq += m.dims[a.source] * n.dims[a.target];
    Matrix eq(neq, nvars);
    std::size_t row = 0;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const int i = arrows[a].source, j = arrows[a].target;
        const Matrix& Ma = m.maps[a];
        const Matrix& Na = n.maps[a];
        for (std::size_t r = 0; r < m.dims[i]; ++r)
            for (std::size_t c = 0; c < n.dims[j]; ++c, ++row) {
                // (M_a f_j)(r, c) - (f_i N_a)(r, c)
                for (std::size_t k = 0; k < m.dims[j]; ++k)
                    if (Ma(r, k)) {
                        auto& e = eq(row, off[j] + k * n.dims[j] + c);
                        e = fp::add(e, Ma(r, k));
                    }
                for (std::size_t k = 0; k < n.dims[i]; ++k)
                    if (Na(k, c)) {
                        auto& e = eq(row, off[i] + r * n.dims[i] + k);
                        e = fp::sub(e, Na(k, c));
                    }
            }
    }
    Matrix ker = kernel(eq);
    std::vector<RepHom> basis;
    for (std::size_t r = 0; r < ker.rows(); ++r) basis.push_back(hom_from_vector(m, n, ker.row(r)));
    return basis;
}

std::size_t hom_dim(const Representation& m, const Representation& n) { return hom_basis(m, n).size(); }

std::size_t span_dim(const std::vector<RepHom>& fs) {
    if (fs.empty()) return 0;
    Matrix mat(0, 0);
    for (const auto& f : fs) mat.append_row(hom_to_vector(f));
    if (mat.cols() == 0) return 0;
    return rank(mat);
}

SubmoduleResult submodule(const Representation& m, const Subspaces& spans) {
    SubmoduleResult res;
    res.module.alg = m.alg;
    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        Matrix s = spans[v].rows() == 0 ? Matrix(0, m.dims[v]) : spans[v];
        if (s.cols() != m.dims[v]) throw DimensionError("submodule: spanning rows have the wrong width");
        bases.push_back(row_basis(s));
        res.module.dims.push_back(bases.back().rows());
    }
    const auto& arrows = m.alg->quiver().arrows;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const int i = arrows[a].source, j = arrows[a].target;
        Matrix y = bases[i] * m.maps[a];
        auto x = solve_left(bases[j], y);
        if (!x) throw ModuleError("subspaces are not closed under the arrow '" + arrows[a].id + "'");
        res.module.maps.push_back(*x);
    }
    res.inclusion.comps = std::move(bases);
    return res;
}

QuotientResult quotient(const Representation& m, const Subspaces& spans) {
    QuotientResult res;
    res.module.alg = m.alg;
    std::vector<Complement> comps;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        Matrix s = spans[v].rows() == 0 ? Matrix(0, m.dims[v]) : spans[v];
        comps.push_back(complement_of(s, m.dims[v]));
        res.module.dims.push_back(comps.back().complement.rows());
    }
    const auto& arrows = m.alg->quiver().arrows;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const int i = arrows[a].source, j = arrows[a].target;
        if (spans[i].rows() > 0 && !(spans[i] * m.maps[a] * comps[j].quotient).is_zero())
            throw ModuleError("quotient by a non-submodule along arrow '" + arrows[a].id + "'");
        res.module.maps.push_back(comps[i].complement * m.maps[a] * comps[j].quotient);
    }
    for (auto& c : comps) res.projection.comps.push_back(std::move(c.quotient));
    return res;
}

SubmoduleResult kernel(const Representation& m, const RepHom& f) {
    Subspaces s;
    for (const auto& c : f.comps) s.push_back(left_kernel(c));
    for (std::size_t v = 0; v < s.size(); ++v)
        if (s[v].rows() == 0) s[v] = Matrix(0, m.dims[v]);
    return submodule(m, s);
}

SubmoduleResult image(const Representation& n, const RepHom& f) { return submodule(n, f.comps); }

QuotientResult cokernel(const Representation& n, const RepHom& f) { return quotient(n, f.comps); }

Subspaces radical_subspaces(const Representation& m) {
    const auto& arrows = m.alg->quiver().arrows;
    Subspaces rad;
    for (std::size_t j = 0; j < m.dims.size(); ++j) {
        Matrix acc(0, m.dims[j]);
        for (std::size_t a = 0; a < arrows.size(); ++a)
            if (arrows[a].target == int(j) && m.maps[a].rows() > 0) acc = Matrix::vstack(acc, m.maps[a]);
        rad.push_back(row_basis(acc));
    }
    return rad;
}

Subspaces socle_subspaces(const Representation& m) {
    const auto& arrows = m.alg->quiver().arrows;
    Subspaces soc;
    for (std::size_t i = 0; i < m.dims.size(); ++i) {
        Matrix acc(m.dims[i], 0);
        for (std::size_t a = 0; a < arrows.size(); ++a)
            if (arrows[a].source == int(i)) acc = Matrix::hstack(acc, m.maps[a]);
        soc.push_back(acc.cols() == 0 ? Matrix::identity(m.dims[i]) : left_kernel(acc));
        if (soc.back().rows() == 0) soc.back() = Matrix(0, m.dims[i]);
    }
    return soc;
}

std::vector<std::size_t> top_dims(const Representation& m) {
    auto rad = radical_subspaces(m);
    std::vector<std::size_t> t;
    for (std::size_t v = 0; v < m.dims.size(); ++v) t.push_back(m.dims[v] - rad[v].rows());
    return t;
}

Representation projective_sum(AlgebraPtr alg, const std::vector<int>& summands) {
    if (summands.empty()) return zero_module(alg);
    std::vector<Representation> parts;
    for (int v : summands) parts.push_back(projective_module(alg, v));
    return direct_sum(parts);
}

Representation injective_sum(AlgebraPtr alg, const std::vector<int>& summands) {
    if (summands.empty()) return zero_module(alg);
    std::vector<Representation> parts;
    for (int v : summands) parts.push_back(injective_module(alg, v));
    return direct_sum(parts);
}

RepHom projective_hom(AlgebraPtr alg, const std::vector<int>& src, const std::vector<int>& tgt,
                      const ElementMatrix& entries) {
    const Algebra& A = *alg;
    auto pos = block_positions(A);
    const int n = int(A.vertex_count());
    RepHom f;
    for (int w = 0; w < n; ++w) {
        std::size_t rows = 0, cols = 0;
        for (int s : src) rows += A.paths_between(s, w).size();
        for (int t : tgt) cols += A.paths_between(t, w).size();
        Matrix c(rows, cols);
        std::size_t r0 = 0;
        for (std::size_t i = 0; i < src.size(); ++i) {
            const auto& ps = A.paths_between(src[i], w);
            std::size_t c0 = 0;
            for (std::size_t j = 0; j < tgt.size(); ++j) {
                const Element& x = entries[i][j];
                for (std::size_t r = 0; r < ps.size(); ++r)
                    for (std::size_t k = 0; k < x.size(); ++k) {
                        if (x[k] == 0) continue;
                        for (const auto& [q, coef] : A.product(k, ps[r])) {
                            auto& e = c(r0 + r, c0 + pos[q]);
                            e = fp::add(e, fp::mul(x[k], coef));
                        }
                    }
                c0 += A.paths_between(tgt[j], w).size();
            }
            r0 += ps.size();
        }
        f.comps.push_back(std::move(c));
    }
    return f;
}

ElementMatrix projective_entries(AlgebraPtr alg, const std::vector<int>& src, const std::vector<int>& tgt,
                                 const RepHom& f) {
    const Algebra& A = *alg;
    ElementMatrix out(src.size(), std::vector<Element>(tgt.size(), A.zero()));
    const int n = int(A.vertex_count());
    // Row of the generator e_{s_i} inside the component at vertex s_i.
    std::vector<std::size_t> row_off(n, 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        const int s = src[i];
        std::size_t r = 0;
        for (std::size_t k = 0; k < i; ++k) r += A.paths_between(src[k], s).size();
        const Matrix& c = f.comps[s];
        std::size_t c0 = 0;
        for (std::size_t j = 0; j < tgt.size(); ++j) {
            const auto& ps = A.paths_between(tgt[j], s);
            for (std::size_t q = 0; q < ps.size(); ++q) out[i][j][ps[q]] = c(r, c0 + q);
            c0 += ps.size();
        }
    }
    (void)row_off;
    return out;
}

RepHom nakayama_hom(AlgebraPtr alg, const std::vector<int>& src, const std::vector<int>& tgt,
                    const ElementMatrix& entries) {
    const Algebra& A = *alg;
    auto pos = block_positions(A);
    const int n = int(A.vertex_count());
    RepHom f;
    for (int w = 0; w < n; ++w) {
        std::size_t rows = 0, cols = 0;
        for (int s : src) rows += A.paths_between(w, s).size();
        for (int t : tgt) cols += A.paths_between(w, t).size();
        Matrix c(rows, cols);
        std::size_t r0 = 0;
        for (std::size_t i = 0; i < src.size(); ++i) {
            std::size_t c0 = 0;
            for (std::size_t j = 0; j < tgt.size(); ++j) {
                const Element& x = entries[i][j];
                const auto& ys = A.paths_between(w, tgt[j]);
                // phi_p |-> sum_y [coefficient of p in y x] phi_y
                for (std::size_t yc = 0; yc < ys.size(); ++yc)
                    for (std::size_t k = 0; k < x.size(); ++k) {
                        if (x[k] == 0) continue;
                        for (const auto& [q, coef] : A.product(ys[yc], k)) {
                            auto& e = c(r0 + pos[q], c0 + yc);
                            e = fp::add(e, fp::mul(x[k], coef));
                        }
                    }
                c0 += ys.size();
            }
            r0 += A.paths_between(w, src[i]).size();
        }
        f.comps.push_back(std::move(c));
    }
    return f;
}

ProjectiveCover projective_cover(const Representation& m) {
    const Algebra& A = *m.alg;
    auto rad = radical_subspaces(m);
    ProjectiveCover pc;
    std::vector<std::pair<int, std::size_t>> gens;  // (vertex, unit index)
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        auto c = complement_of(rad[v], m.dims[v]);
        for (std::size_t r = 0; r < c.complement.rows(); ++r)
            for (std::size_t k = 0; k < m.dims[v]; ++k)
                if (c.complement(r, k) != 0) gens.emplace_back(int(v), k);
    }
    for (const auto& g : gens) pc.summands.push_back(g.first);
    pc.module = projective_sum(m.alg, pc.summands);
    std::vector<Matrix> acts(A.dim());
    std::vector<bool> have(A.dim(), false);
    for (std::size_t w = 0; w < m.dims.size(); ++w) {
        Matrix c(pc.module.dims[w], m.dims[w]);
        std::size_t r0 = 0;
        for (const auto& [v, k] : gens) {
            const auto& ps = A.paths_between(v, int(w));
            for (std::size_t r = 0; r < ps.size(); ++r) {
                if (!have[ps[r]]) {
                    acts[ps[r]] = path_action(m, A.basis(ps[r]));
                    have[ps[r]] = true;
                }
                for (std::size_t j = 0; j < m.dims[w]; ++j) c(r0 + r, j) = acts[ps[r]](k, j);
            }
            r0 += ps.size();
        }
        pc.map.comps.push_back(std::move(c));
    }
    return pc;
}

Presentation minimal_presentation(const Representation& m) {
    Presentation pr;
    ProjectiveCover c0 = projective_cover(m);
    SubmoduleResult k = kernel(c0.module, c0.map);
    ProjectiveCover c1 = projective_cover(k.module);
    pr.p0 = c0.summands;
    pr.p1 = c1.summands;
    pr.P0 = c0.module;
    pr.P1 = c1.module;
    pr.cover = c0.map;
    pr.syzygy = k.module;
    pr.syzygy_inclusion = k.inclusion;
    pr.d = compose(c1.map, k.inclusion);
    pr.d_entries = projective_entries(m.alg, pr.p1, pr.p0, pr.d);
    return pr;
}

InjectiveEnvelope injective_envelope(const Representation& m) {
    ProjectiveCover c = projective_cover(dual_module(m));
    InjectiveEnvelope env;
    env.summands = c.summands;
    env.module = dual_module(c.module);
    env.map = dual_hom(c.map);
    return env;
}

std::size_t ext1_dim(const Representation& m, const Representation& n) {
    ProjectiveCover c0 = projective_cover(m);
    SubmoduleResult k = kernel(c0.module, c0.map);
    std::size_t hk = hom_dim(k.module, n);
    if (hk == 0) return 0;
    std::vector<RepHom> restricted;
    for (const auto& g : hom_basis(c0.module, n)) restricted.push_back(compose(k.inclusion, g));
    return hk - span_dim(restricted);
}

std::size_t stable_hom_dim_injective(const Representation& m, const Representation& n) {
    std::size_t h = hom_dim(m, n);
    if (h == 0) return 0;
    InjectiveEnvelope env = injective_envelope(m);
    std::vector<RepHom> through;
    for (const auto& g : hom_basis(env.module, n)) through.push_back(compose(env.map, g));
    return h - span_dim(through);
}

bool is_projective(const Representation& m) {
    return projective_cover(m).module.total_dim() == m.total_dim();
}

bool is_injective(const Representation& m) { return is_projective(dual_module(m)); }

Representation tau(const Representation& m) {
    if (m.is_zero()) return zero_module(m.alg);
    Presentation pr = minimal_presentation(m);
    Representation i1 = injective_sum(m.alg, pr.p1);
    RepHom nd = nakayama_hom(m.alg, pr.p1, pr.p0, pr.d_entries);
    return kernel(i1, nd).module;
}

Representation tau_inverse(const Representation& m) { return dual_module(tau(dual_module(m))); }

std::vector<RepHom> endomorphism_radical(const Representation& m, const std::vector<RepHom>& end_basis) {
    const std::size_t k = end_basis.size();
    Matrix t(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            Scalar tr = 0;
            for (std::size_t v = 0; v < m.dims.size(); ++v) {
                const Matrix& a = end_basis[i].comps[v];
                const Matrix& b = end_basis[j].comps[v];
                for (std::size_t r = 0; r < a.rows(); ++r)
                    for (std::size_t s = 0; s < a.cols(); ++s) tr = fp::add(tr, fp::mul(a(r, s), b(s, r)));
            }
            t(i, j) = t(j, i) = tr;
        }
    Matrix ker = kernel(t);
    std::vector<RepHom> rad;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        RepHom acc = zero_hom(m, m);
        for (std::size_t i = 0; i < k; ++i)
            if (ker(r, i)) acc = hom_add(acc, hom_scale(end_basis[i], ker(r, i)));
        rad.push_back(std::move(acc));
    }
    return rad;
}

namespace {

constexpr int kSplitAttempts = 48;

void split_into(const Representation& m, std::vector<Representation>& out) {
    if (m.is_zero()) return;
    auto end = hom_basis(m, m);
    if (end.size() <= 1) {
        out.push_back(m);
        return;
    }
    if (end.size() - endomorphism_radical(m, end).size() == 1) {
        out.push_back(m);
        return;
    }
    const std::size_t n = m.total_dim();
    std::mt19937_64 rng(0x7f4a7c15u + n);
    std::uniform_int_distribution<std::uint32_t> dist(0, fp::prime() - 1);
    for (int attempt = 0; attempt < kSplitAttempts; ++attempt) {
        RepHom phi = zero_hom(m, m);
        for (const auto& f : end) phi = hom_add(phi, hom_scale(f, dist(rng)));
        poly::Poly chi{1};
        for (const auto& c : phi.comps)
            if (c.rows() > 0) chi = poly::mul(chi, poly::charpoly(c));
        auto factor = poly::proper_factor(poly::squarefree_part(chi), rng);
        if (!factor) continue;
        RepHom psi;
        for (const auto& c : phi.comps) psi.comps.push_back(matrix_power(poly::evaluate(*factor, c), n));
        SubmoduleResult k = kernel(m, psi);
        SubmoduleResult im = image(m, psi);
        if (k.module.is_zero() || im.module.is_zero()) continue;
        split_into(k.module, out);
        split_into(im.module, out);
        return;
    }
    // End(M)/rad is a field larger than F_p: no splitting endomorphism exists.
    out.push_back(m);
}

}  // namespace

std::vector<Representation> decompose(const Representation& m) {
    std::vector<Representation> out;
    split_into(m, out);
    return out;
}

bool is_indecomposable(const Representation& m) { return !m.is_zero() && decompose(m).size() == 1; }

bool isomorphic_indecomposables(const Representation& m, const Representation& n) {
    if (m.dims != n.dims) return false;
    if (m.is_zero()) return true;
    auto f = hom_basis(m, n);
    if (f.empty()) return false;
    auto g = hom_basis(n, m);
    for (const auto& a : f)
        for (const auto& b : g) {
            RepHom c = compose(a, b);
            if (!is_nilpotent(Matrix::block_diag(c.comps))) return true;
        }
    return false;
}

bool isomorphic(const Representation& m, const Representation& n) {
    if (m.dims != n.dims) return false;
    auto a = decompose(m);
    auto b = decompose(n);
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j)
            if (!used[j] && isomorphic_indecomposables(x, b[j])) used[j] = found = true;
        if (!found) return false;
    }
    return true;
}

namespace {

struct Component {
    std::size_t target;
    RepHom map;
};

Approximation assemble(const Representation& m, const std::vector<Representation>& s,
                       const std::vector<Component>& comps, bool left) {
    Approximation ap;
    std::vector<Representation> parts;
    for (const auto& c : comps) {
        ap.targets.push_back(c.target);
        parts.push_back(s[c.target]);
    }
    ap.module = parts.empty() ? zero_module(m.alg) : direct_sum(parts);
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        Matrix acc = left ? Matrix(m.dims[v], 0) : Matrix(0, m.dims[v]);
        for (const auto& c : comps) acc = left ? Matrix::hstack(acc, c.map.comps[v]) : Matrix::vstack(acc, c.map.comps[v]);
        ap.map.comps.push_back(std::move(acc));
    }
    return ap;
}

Approximation approximate(const Representation& m, const std::vector<Representation>& s, bool left) {
    std::vector<std::vector<std::vector<RepHom>>> between(s.size(), std::vector<std::vector<RepHom>>(s.size()));
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b) between[a][b] = hom_basis(s[a], s[b]);
    std::vector<Component> comps;
    std::vector<std::size_t> need(s.size());
    for (std::size_t t = 0; t < s.size(); ++t) {
        auto basis = left ? hom_basis(m, s[t]) : hom_basis(s[t], m);
        need[t] = basis.size();
        for (auto& f : basis) comps.push_back({t, std::move(f)});
    }
    auto works = [&](const std::vector<bool>& active) {
        for (std::size_t t = 0; t < s.size(); ++t) {
            if (need[t] == 0) continue;
            std::vector<RepHom> gen;
            for (std::size_t k = 0; k < comps.size(); ++k) {
                if (!active[k]) continue;
                if (left)
                    for (const auto& g : between[comps[k].target][t]) gen.push_back(compose(comps[k].map, g));
                else
                    for (const auto& h : between[t][comps[k].target]) gen.push_back(compose(h, comps[k].map));
            }
            if (span_dim(gen) != need[t]) return false;
        }
        return true;
    };
    std::vector<bool> active(comps.size(), true);
    for (std::size_t k = comps.size(); k-- > 0;) {
        active[k] = false;
        if (!works(active)) active[k] = true;
    }
    std::vector<Component> kept;
    for (std::size_t k = 0; k < comps.size(); ++k)
        if (active[k]) kept.push_back(comps[k]);
    return assemble(m, s, kept, left);
}

}  // namespace

Approximation left_approximation(const Representation& m, const std::vector<Representation>& s) {
    return approximate(m, s, true);
}

Approximation right_approximation(const Representation& m, const std::vector<Representation>& s) {
    return approximate(m, s, false);
}

bool in_fac(const Representation& m, const std::vector<Representation>& s) {
    if (m.is_zero()) return true;
    std::vector<Matrix> acc;
    for (auto d : m.dims) acc.emplace_back(0, d);
    for (const auto& x : s)
        for (const auto& g : hom_basis(x, m))
            for (std::size_t v = 0; v < m.dims.size(); ++v)
                if (g.comps[v].rows() > 0) acc[v] = Matrix::vstack(acc[v], g.comps[v]);
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        if (rank(acc[v]) != m.dims[v]) return false;
    return true;
}

namespace {

constexpr double kMaxSubobjectSearch = 4.0e6;

double subspace_count(std::size_t n) {
    const double p = fp::prime();
    double total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        double g = 1;
        for (std::size_t i = 0; i < k; ++i) g *= (std::pow(p, double(n - i)) - 1) / (std::pow(p, double(i + 1)) - 1);
        total += g;
    }
    return total;
}

// All subspaces of F_p^n, each as a reduced row basis.
std::vector<Matrix> all_subspaces(std::size_t n) {
    std::vector<Matrix> out;
    const std::uint32_t p = fp::prime();
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> piv(k);
        std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t idx, std::size_t from) {
            if (idx == k) {
                std::vector<bool> is_piv(n, false);
                for (auto c : piv) is_piv[c] = true;
                std::vector<std::pair<std::size_t, std::size_t>> free;
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t c = piv[i] + 1; c < n; ++c)
                        if (!is_piv[c]) free.emplace_back(i, c);
                std::vector<std::uint32_t> digits(free.size(), 0);
                while (true) {
                    Matrix m(k, n);
                    for (std::size_t i = 0; i < k; ++i) m(i, piv[i]) = 1;
                    for (std::size_t f = 0; f < free.size(); ++f) m(free[f].first, free[f].second) = digits[f];
                    out.push_back(std::move(m));
                    std::size_t f = 0;
                    while (f < digits.size() && ++digits[f] == p) digits[f++] = 0;
                    if (f == digits.size()) break;
                }
                return;
            }
            for (std::size_t c = from; c < n; ++c) {
                piv[idx] = c;
                choose(idx + 1, c + 1);
            }
        };
        choose(0, 0);
    }
    return out;
}

}  // namespace

std::vector<Subspaces> subobject_list(const Representation& m, std::size_t dim_cap) {
    if (m.total_dim() > dim_cap)
        throw CapError("subobject enumeration refused: dim " + std::to_string(m.total_dim()) + " exceeds cap " +
                       std::to_string(dim_cap));
    double estimate = 1;
    for (auto d : m.dims) estimate *= subspace_count(d);
    if (estimate > kMaxSubobjectSearch)
        throw CapError("subobject enumeration refused: search space too large for this prime");
    const std::size_t nv = m.dims.size();
    std::vector<std::vector<Matrix>> choices;
    for (auto d : m.dims) choices.push_back(all_subspaces(d));
    const auto& arrows = m.alg->quiver().arrows;
    std::vector<Subspaces> out;
    Subspaces cur(nv);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == nv) {
            out.push_back(cur);
            return;
        }
        for (const auto& s : choices[v]) {
            cur[v] = s;
            bool ok = true;
            for (std::size_t a = 0; a < arrows.size() && ok; ++a) {
                const std::size_t i = arrows[a].source, j = arrows[a].target;
                if (i > v || j > v || (i != v && j != v)) continue;
                if (cur[i].rows() == 0) continue;
                Matrix img = cur[i] * m.maps[a];
                ok = row_space_contains(cur[j].rows() ? cur[j] : Matrix(0, m.dims[j]), img) || img.is_zero();
            }
            if (ok) rec(v + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace reltilt
