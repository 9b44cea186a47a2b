#include "reltilt/two_term.hpp"

#include <functional>
#include <sstream>

namespace reltilt {

// ---- maps between projective sums ----

ElementMatrix pm_zero(const Algebra& alg, std::size_t rows, std::size_t cols) {
    return ElementMatrix(rows, std::vector<Element>(cols, alg.zero()));
}

ElementMatrix pm_identity(const Algebra& alg, const ProjSum& s) {
    ElementMatrix m = pm_zero(alg, s.size(), s.size());
    for (std::size_t i = 0; i < s.size(); ++i) m[i][i] = alg.basis_element(alg.idempotent(s[i]));
    return m;
}

ElementMatrix pm_compose(const Algebra& alg, const ElementMatrix& f, const ElementMatrix& g, std::size_t cols) {
    const std::size_t mid = g.size();
    ElementMatrix out = pm_zero(alg, f.size(), cols);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < mid; ++j) {
            if (element_is_zero(f[i][j])) continue;
            for (std::size_t k = 0; k < cols; ++k) {
                if (element_is_zero(g[j][k])) continue;
                out[i][k] = element_add(out[i][k], alg.multiply(g[j][k], f[i][j]));
            }
        }
    return out;
}

ElementMatrix pm_add(const ElementMatrix& f, const ElementMatrix& g) {
    ElementMatrix out = f;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f[i].size(); ++j) out[i][j] = element_add(f[i][j], g[i][j]);
    return out;
}

ElementMatrix pm_scale(const ElementMatrix& f, Scalar c) {
    ElementMatrix out = f;
    for (auto& row : out)
        for (auto& e : row) e = element_scale(e, c);
    return out;
}

bool pm_is_zero(const ElementMatrix& f) {
    for (const auto& row : f)
        for (const auto& e : row)
            if (!element_is_zero(e)) return false;
    return true;
}

std::size_t pm_dim(const Algebra& alg, const ProjSum& src, const ProjSum& tgt) {
    std::size_t n = 0;
    for (int s : src)
        for (int t : tgt) n += alg.paths_between(t, s).size();
    return n;
}

std::vector<Scalar> pm_to_vector(const Algebra& alg, const ProjSum& src, const ProjSum& tgt, const ElementMatrix& f) {
    std::vector<Scalar> v;
    v.reserve(pm_dim(alg, src, tgt));
    for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t j = 0; j < tgt.size(); ++j)
            for (std::size_t b : alg.paths_between(tgt[j], src[i])) v.push_back(f[i][j][b]);
    return v;
}

ElementMatrix pm_from_vector(const Algebra& alg, const ProjSum& src, const ProjSum& tgt, const Scalar* v) {
    ElementMatrix f = pm_zero(alg, src.size(), tgt.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t j = 0; j < tgt.size(); ++j)
            for (std::size_t b : alg.paths_between(tgt[j], src[i])) f[i][j][b] = v[k++];
    return f;
}

namespace {

using PmFn = std::function<ElementMatrix(const ElementMatrix&)>;

// Matrix of a linear map Hom(P_s, P_t) -> Hom(P_s2, P_t2), one row per basis vector.
Matrix linear_matrix(const Algebra& alg, const ProjSum& s, const ProjSum& t, const ProjSum& s2, const ProjSum& t2,
                     const PmFn& fn) {
    const std::size_t n = pm_dim(alg, s, t);
    const std::size_t m = pm_dim(alg, s2, t2);
    Matrix out(n, m);
    std::vector<Scalar> e(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        e[r] = 1;
        auto img = pm_to_vector(alg, s2, t2, fn(pm_from_vector(alg, s, t, e.data())));
        for (std::size_t c = 0; c < m; ++c) out(r, c) = img[c];
        e[r] = 0;
    }
    return out;
}

std::vector<std::size_t> multiplicities(const Algebra& alg, const ProjSum& s) {
    std::vector<std::size_t> m(alg.vertex_count(), 0);
    for (int v : s) ++m[v];
    return m;
}

// Complex of projectives in consecutive degrees; diffs[k] : terms[k] -> terms[k+1].
struct ProjComplex {
    std::vector<ProjSum> terms;
    std::vector<ElementMatrix> diffs;
};

// Gaussian elimination: cancel unit components P_v -> P_v until none remain.
void reduce(const Algebra& alg, ProjComplex& c) {
    for (;;) {
        bool found = false;
        for (std::size_t k = 0; k < c.diffs.size() && !found; ++k) {
            auto& src = c.terms[k];
            auto& tgt = c.terms[k + 1];
            for (std::size_t i = 0; i < src.size() && !found; ++i)
                for (std::size_t j = 0; j < tgt.size() && !found; ++j) {
                    if (src[i] != tgt[j]) continue;
                    const int v = src[i];
                    const Element& u = c.diffs[k][i][j];
                    if (u[alg.idempotent(v)] == 0) continue;
                    found = true;
                    Element uinv = local_inverse(alg, v, u);
                    ElementMatrix& d = c.diffs[k];
                    for (std::size_t a = 0; a < src.size(); ++a) {
                        if (a == i || element_is_zero(d[a][j])) continue;
                        Element left = alg.multiply(uinv, d[a][j]);
                        for (std::size_t b = 0; b < tgt.size(); ++b) {
                            if (b == j || element_is_zero(d[i][b])) continue;
                            d[a][b] = element_sub(d[a][b], alg.multiply(d[i][b], left));
                        }
                    }
                    d.erase(d.begin() + std::ptrdiff_t(i));
                    for (auto& row : d) row.erase(row.begin() + std::ptrdiff_t(j));
                    if (k > 0)
                        for (auto& row : c.diffs[k - 1]) row.erase(row.begin() + std::ptrdiff_t(i));
                    if (k + 1 < c.diffs.size()) c.diffs[k + 1].erase(c.diffs[k + 1].begin() + std::ptrdiff_t(j));
                    src.erase(src.begin() + std::ptrdiff_t(i));
                    tgt.erase(tgt.begin() + std::ptrdiff_t(j));
                }
        }
        if (!found) return;
    }
}

ProjComplex cone_complex(const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& f) {
    const Algebra& alg = *c.alg;
    ProjComplex pc;
    ProjSum mid = c.p0;
    mid.insert(mid.end(), d.p1.begin(), d.p1.end());
    pc.terms = {c.p1, mid, d.p0};
    ElementMatrix d0 = pm_zero(alg, c.p1.size(), mid.size());
    for (std::size_t i = 0; i < c.p1.size(); ++i) {
        for (std::size_t j = 0; j < c.p0.size(); ++j) d0[i][j] = element_scale(c.d[i][j], fp::neg(1));
        for (std::size_t j = 0; j < d.p1.size(); ++j) d0[i][c.p0.size() + j] = f.f1[i][j];
    }
    ElementMatrix d1 = pm_zero(alg, mid.size(), d.p0.size());
    for (std::size_t j = 0; j < d.p0.size(); ++j) {
        for (std::size_t i = 0; i < c.p0.size(); ++i) d1[i][j] = f.f0[i][j];
        for (std::size_t i = 0; i < d.p1.size(); ++i) d1[c.p0.size() + i][j] = d.d[i][j];
    }
    pc.diffs = {d0, d1};
    return pc;
}

}  // namespace

// ---- complexes ----

std::vector<std::size_t> TwoTermComplex::mult1() const { return multiplicities(*alg, p1); }
std::vector<std::size_t> TwoTermComplex::mult0() const { return multiplicities(*alg, p0); }

TwoTermComplex stalk(AlgebraPtr alg, int v) {
    TwoTermComplex c{alg, {}, {v}, {}};
    return c;
}

TwoTermComplex shifted_stalk(AlgebraPtr alg, int v) {
    TwoTermComplex c{alg, {v}, {}, {}};
    c.d.assign(1, {});
    return c;
}

TwoTermComplex zero_complex(AlgebraPtr alg) { return TwoTermComplex{alg, {}, {}, {}}; }

TwoTermComplex complex_sum(const std::vector<TwoTermComplex>& parts) {
    if (parts.empty()) throw ModuleError("complex_sum needs at least one part to know the algebra");
    const Algebra& alg = *parts[0].alg;
    TwoTermComplex out{parts[0].alg, {}, {}, {}};
    for (const auto& p : parts) {
        out.p1.insert(out.p1.end(), p.p1.begin(), p.p1.end());
        out.p0.insert(out.p0.end(), p.p0.begin(), p.p0.end());
    }
    out.d = pm_zero(alg, out.p1.size(), out.p0.size());
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.p1.size(); ++i)
            for (std::size_t j = 0; j < p.p0.size(); ++j) out.d[r + i][c + j] = p.d[i][j];
        r += p.p1.size();
        c += p.p0.size();
    }
    return out;
}

TwoTermComplex presentation_complex(const Representation& m) {
    Presentation pres = minimal_presentation(m);
    TwoTermComplex c{m.alg, pres.p1, pres.p0, pres.d_entries};
    if (c.d.size() != c.p1.size()) c.d = pm_zero(*m.alg, c.p1.size(), c.p0.size());
    return c;
}

void validate_complex(const TwoTermComplex& c) {
    const Algebra& alg = *c.alg;
    const int n = int(alg.vertex_count());
    for (int v : c.p1)
        if (v < 0 || v >= n) throw ModuleError("complex: vertex index out of range");
    for (int v : c.p0)
        if (v < 0 || v >= n) throw ModuleError("complex: vertex index out of range");
    if (c.d.size() != c.p1.size()) throw ModuleError("complex: differential has the wrong number of rows");
    for (std::size_t i = 0; i < c.p1.size(); ++i) {
        if (c.d[i].size() != c.p0.size()) throw ModuleError("complex: differential has the wrong number of columns");
        for (std::size_t j = 0; j < c.p0.size(); ++j) {
            const Element& x = c.d[i][j];
            if (x.size() != alg.dim()) throw ModuleError("complex: element has the wrong length");
            std::vector<bool> allowed(alg.dim(), false);
            for (auto b : alg.paths_between(c.p0[j], c.p1[i])) allowed[b] = true;
            for (std::size_t b = 0; b < x.size(); ++b)
                if (x[b] && !allowed[b])
                    throw ModuleError("complex: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") uses a path with the wrong endpoints");
        }
    }
}

ChainMap chain_zero(const TwoTermComplex& c, const TwoTermComplex& d) {
    return {pm_zero(*c.alg, c.p1.size(), d.p1.size()), pm_zero(*c.alg, c.p0.size(), d.p0.size())};
}

ChainMap chain_identity(const TwoTermComplex& c) { return {pm_identity(*c.alg, c.p1), pm_identity(*c.alg, c.p0)}; }

ChainMap chain_compose(const Algebra& alg, const ChainMap& f, const ChainMap& g, const TwoTermComplex& target) {
    return {pm_compose(alg, f.f1, g.f1, target.p1.size()), pm_compose(alg, f.f0, g.f0, target.p0.size())};
}

ChainMap chain_add(const ChainMap& f, const ChainMap& g) { return {pm_add(f.f1, g.f1), pm_add(f.f0, g.f0)}; }

bool is_chain_map(const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& f) {
    const Algebra& alg = *c.alg;
    auto a = pm_to_vector(alg, c.p1, d.p0, pm_compose(alg, c.d, f.f0, d.p0.size()));
    auto b = pm_to_vector(alg, c.p1, d.p0, pm_compose(alg, f.f1, d.d, d.p0.size()));
    return a == b;
}

std::vector<Scalar> chain_to_vector(const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& f) {
    const Algebra& alg = *c.alg;
    auto v = pm_to_vector(alg, c.p1, d.p1, f.f1);
    auto w = pm_to_vector(alg, c.p0, d.p0, f.f0);
    v.insert(v.end(), w.begin(), w.end());
    return v;
}

HomKSpace hom_k(const TwoTermComplex& c, const TwoTermComplex& d) {
    const Algebra& alg = *c.alg;
    const std::size_t n1 = pm_dim(alg, c.p1, d.p1);
    const std::size_t n0 = pm_dim(alg, c.p0, d.p0);
    const std::size_t nt = pm_dim(alg, c.p1, d.p0);
    const std::size_t nh = pm_dim(alg, c.p0, d.p1);

    // (f1, f0) |-> d_C f0 - f1 d_D, in "then" order.
    Matrix phi1 = linear_matrix(alg, c.p1, d.p1, c.p1, d.p0, [&](const ElementMatrix& f1) {
        return pm_scale(pm_compose(alg, f1, d.d, d.p0.size()), fp::neg(1));
    });
    Matrix phi0 = linear_matrix(alg, c.p0, d.p0, c.p1, d.p0,
                                [&](const ElementMatrix& f0) { return pm_compose(alg, c.d, f0, d.p0.size()); });
    Matrix phi = Matrix::vstack(phi1, phi0);
    if (phi.rows() == 0) phi = Matrix(0, nt);
    Matrix cycles = nt == 0 ? Matrix::identity(n1 + n0) : left_kernel(phi);

    // Null-homotopic maps (d_C h, h d_D) for h : C0 -> D1.
    Matrix bnd1 = linear_matrix(alg, c.p0, d.p1, c.p1, d.p1,
                                [&](const ElementMatrix& h) { return pm_compose(alg, c.d, h, d.p1.size()); });
    Matrix bnd0 = linear_matrix(alg, c.p0, d.p1, c.p0, d.p0,
                                [&](const ElementMatrix& h) { return pm_compose(alg, h, d.d, d.p0.size()); });
    Matrix bnd = Matrix::hstack(bnd1, bnd0);
    if (nh == 0) bnd = Matrix(0, n1 + n0);

    HomKSpace out;
    out.cycles = cycles;
    out.quotient = complement_of(row_basis(bnd), n1 + n0).quotient;
    Matrix images = cycles * out.quotient;
    RrefResult rr = rref(images.transpose());
    for (std::size_t col : rr.pivots) {
        const Scalar* row = cycles.row_ptr(col);
        ChainMap f{pm_from_vector(alg, c.p1, d.p1, row), pm_from_vector(alg, c.p0, d.p0, row + n1)};
        out.basis.push_back(f);
    }
    return out;
}

std::vector<Scalar> homotopy_class(const TwoTermComplex& c, const TwoTermComplex& d, const HomKSpace& h,
                                   const ChainMap& f) {
    Matrix reps(0, h.quotient.rows());
    for (const auto& b : h.basis) reps.append_row(chain_to_vector(c, d, b));
    Matrix target(0, h.quotient.rows());
    target.append_row(chain_to_vector(c, d, f));
    auto sol = solve_left(reps * h.quotient, target * h.quotient);
    if (!sol) throw ModuleError("homotopy_class: map is not a chain map");
    return sol->row(0);
}

ShiftHomSpace hom_k_shift1(const TwoTermComplex& c, const TwoTermComplex& d) {
    const Algebra& alg = *c.alg;
    const std::size_t n = pm_dim(alg, c.p1, d.p0);
    Matrix a = linear_matrix(alg, c.p0, d.p0, c.p1, d.p0,
                             [&](const ElementMatrix& g) { return pm_compose(alg, c.d, g, d.p0.size()); });
    Matrix b = linear_matrix(alg, c.p1, d.p1, c.p1, d.p0,
                             [&](const ElementMatrix& g) { return pm_compose(alg, g, d.d, d.p0.size()); });
    Matrix sub = Matrix::vstack(a, b);
    Complement comp = complement_of(row_basis(sub), n);
    ShiftHomSpace out;
    for (std::size_t r = 0; r < comp.complement.rows(); ++r)
        out.basis.push_back(pm_from_vector(alg, c.p1, d.p0, comp.complement.row_ptr(r)));
    return out;
}

std::size_t hom_k_shift1_dim(const TwoTermComplex& c, const TwoTermComplex& d) { return hom_k_shift1(c, d).dim(); }

std::size_t shift1_dim_via_modules(const TwoTermComplex& c, const TwoTermComplex& d) {
    Representation h = h_functor(d).module;
    Representation p1 = projective_sum(c.alg, c.p1);
    Representation p0 = projective_sum(c.alg, c.p0);
    RepHom dm = projective_hom(c.alg, c.p1, c.p0, c.d);
    std::vector<RepHom> images;
    for (const auto& g : hom_basis(p0, h)) images.push_back(compose(dm, g));
    return hom_dim(p1, h) - span_dim(images);
}

TwoTermComplex minimal_form(const TwoTermComplex& c) {
    ProjComplex pc{{c.p1, c.p0}, {c.d}};
    reduce(*c.alg, pc);
    TwoTermComplex out{c.alg, pc.terms[0], pc.terms[1], pc.diffs[0]};
    if (out.d.size() != out.p1.size()) out.d = pm_zero(*c.alg, out.p1.size(), out.p0.size());
    return out;
}

bool is_minimal(const TwoTermComplex& c) {
    for (std::size_t i = 0; i < c.p1.size(); ++i)
        for (std::size_t j = 0; j < c.p0.size(); ++j)
            if (c.p1[i] == c.p0[j] && c.d[i][j][c.alg->idempotent(c.p1[i])] != 0) return false;
    return true;
}

TwoTermComplex cone(const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& f) {
    ProjComplex pc = cone_complex(c, d, f);
    reduce(*c.alg, pc);
    if (!pc.terms[0].empty()) throw ModuleError("cone not two-term after reduction");
    TwoTermComplex out{c.alg, pc.terms[1], pc.terms[2], pc.diffs[1]};
    if (out.d.size() != out.p1.size()) out.d = pm_zero(*c.alg, out.p1.size(), out.p0.size());
    return out;
}

TwoTermComplex cocone(const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& f) {
    ProjComplex pc = cone_complex(c, d, f);
    reduce(*c.alg, pc);
    if (!pc.terms[2].empty()) throw ModuleError("cocone not two-term after reduction");
    TwoTermComplex out{c.alg, pc.terms[0], pc.terms[1], pm_scale(pc.diffs[0], fp::neg(1))};
    if (out.d.size() != out.p1.size()) out.d = pm_zero(*c.alg, out.p1.size(), out.p0.size());
    return out;
}

HPart h_functor(const TwoTermComplex& c) {
    TwoTermComplex m = minimal_form(c);
    Representation p0 = projective_sum(m.alg, m.p0);
    RepHom dm = projective_hom(m.alg, m.p1, m.p0, m.d);
    HPart out;
    out.module = cokernel(p0, dm).module;
    out.e_part = m.mult1();
    if (!out.module.is_zero()) {
        Presentation pres = minimal_presentation(out.module);
        for (int v : pres.p1) {
            if (out.e_part[v] == 0) throw ModuleError("internal: minimal complex is not a minimal presentation");
            --out.e_part[v];
        }
    }
    return out;
}

std::vector<TwoTermComplex> decompose_two_term(const TwoTermComplex& c) {
    HPart h = h_functor(c);
    std::vector<TwoTermComplex> out;
    if (!h.module.is_zero())
        for (const auto& s : decompose(h.module)) out.push_back(presentation_complex(s));
    for (int v = 0; v < int(h.e_part.size()); ++v)
        for (std::size_t k = 0; k < h.e_part[v]; ++k) out.push_back(shifted_stalk(c.alg, v));
    return out;
}

bool isomorphic_complexes(const TwoTermComplex& a, const TwoTermComplex& b) {
    HPart ha = h_functor(a);
    HPart hb = h_functor(b);
    return ha.e_part == hb.e_part && isomorphic(ha.module, hb.module);
}

std::string complex_to_string(const TwoTermComplex& c) {
    const Algebra& alg = *c.alg;
    auto sum = [&](const ProjSum& s) {
        if (s.empty()) return std::string("0");
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += "+";
            out += "P" + alg.quiver().vertices[s[i]];
        }
        return out;
    };
    std::ostringstream os;
    os << sum(c.p1) << " -> " << sum(c.p0);
    if (!c.p1.empty() && !c.p0.empty()) {
        os << " [";
        for (std::size_t i = 0; i < c.p1.size(); ++i) {
            if (i) os << "; ";
            for (std::size_t j = 0; j < c.p0.size(); ++j) {
                if (j) os << ", ";
                os << alg.element_to_string(c.d[i][j]);
            }
        }
        os << "]";
    }
    return os.str();
}

}  // namespace reltilt
