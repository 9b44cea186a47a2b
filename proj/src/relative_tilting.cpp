#include "reltilt/relative_tilting.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "reltilt/torsion.hpp"

namespace reltilt {

namespace {

struct Component {
    std::size_t id;
    ChainMap map;  // A -> object(id) for left, object(id) -> A for right
};

TwoTermComplex sum_of(const Workbench& wb, const std::vector<Component>& comps) {
    if (comps.empty()) return zero_complex(wb.alg());
    std::vector<TwoTermComplex> parts;
    for (const auto& c : comps) parts.push_back(wb.object(c.id));
    return complex_sum(parts);
}

std::size_t class_rank(const TwoTermComplex& src, const TwoTermComplex& tgt, const HomKSpace& h,
                       const std::vector<ChainMap>& maps) {
    Matrix rows(0, h.quotient.rows());
    for (const auto& f : maps) rows.append_row(chain_to_vector(src, tgt, f));
    if (rows.rows() == 0) return 0;
    return rank(rows * h.quotient);
}

// Greedy summand dropping. Dropping keeps the approximation property only while the kept
// components span Hom_K(A, S) modulo maps factoring through radical maps, so the result has the
// minimal multiplicity of every S and is therefore the minimal approximation.
template <class Ok>
std::vector<Component> prune(std::vector<Component> comps, Ok ok) {
    for (std::size_t k = comps.size(); k-- > 0;) {
        std::vector<Component> trial = comps;
        trial.erase(trial.begin() + std::ptrdiff_t(k));
        if (ok(trial)) comps = std::move(trial);
    }
    return comps;
}

TTApproximation assemble_left(const Workbench& wb, const TwoTermComplex& a, const std::vector<Component>& comps) {
    const Algebra& alg = wb.algebra();
    TTApproximation out;
    out.target = sum_of(wb, comps);
    out.map = chain_zero(a, out.target);
    std::size_t c1 = 0, c0 = 0;
    for (const auto& c : comps) {
        out.targets.push_back(c.id);
        const auto& obj = wb.object(c.id);
        for (std::size_t i = 0; i < a.p1.size(); ++i)
            for (std::size_t j = 0; j < obj.p1.size(); ++j) out.map.f1[i][c1 + j] = c.map.f1[i][j];
        for (std::size_t i = 0; i < a.p0.size(); ++i)
            for (std::size_t j = 0; j < obj.p0.size(); ++j) out.map.f0[i][c0 + j] = c.map.f0[i][j];
        c1 += obj.p1.size();
        c0 += obj.p0.size();
    }
    (void)alg;
    return out;
}

TTApproximation assemble_right(const Workbench& wb, const TwoTermComplex& a, const std::vector<Component>& comps) {
    TTApproximation out;
    out.target = sum_of(wb, comps);
    out.map = chain_zero(out.target, a);
    std::size_t r1 = 0, r0 = 0;
    for (const auto& c : comps) {
        out.targets.push_back(c.id);
        const auto& obj = wb.object(c.id);
        for (std::size_t i = 0; i < obj.p1.size(); ++i) out.map.f1[r1 + i] = c.map.f1[i];
        for (std::size_t i = 0; i < obj.p0.size(); ++i) out.map.f0[r0 + i] = c.map.f0[i];
        r1 += obj.p1.size();
        r0 += obj.p0.size();
    }
    return out;
}

void require_rigid(const Workbench& wb, const ObjSet& x) {
    auto r = is_two_term_rigid(wb, x);
    if (!r.rigid)
        throw InputError("subcategory " + wb.describe(x) + " is not two-term rigid: Hom_K(" +
                         wb.label(r.witness->first) + ", " + wb.label(r.witness->second) + "[1]) != 0");
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TTApproximation left_approx_tt(const Workbench& wb, const TwoTermComplex& a, const ObjSet& s) {
    const Algebra& alg = wb.algebra();
    std::map<std::size_t, HomKSpace> spaces;
    std::vector<Component> comps;
    for (auto id : s) {
        spaces[id] = hom_k(a, wb.object(id));
        for (const auto& b : spaces[id].basis) comps.push_back({id, b});
    }
    auto ok = [&](const std::vector<Component>& sel) {
        for (auto t : s) {
            const HomKSpace& target_space = spaces[t];
            if (target_space.dim() == 0) continue;
            std::vector<ChainMap> maps;
            for (const auto& c : sel)
                for (const auto& g : wb.hom(c.id, t).basis)
                    maps.push_back(chain_compose(alg, c.map, g, wb.object(t)));
            if (class_rank(a, wb.object(t), target_space, maps) != target_space.dim()) return false;
        }
        return true;
    };
    if (!ok(comps)) throw InvariantError("universal map is not a left approximation");
    return assemble_left(wb, a, prune(comps, ok));
}

TTApproximation right_approx_tt(const Workbench& wb, const TwoTermComplex& a, const ObjSet& s) {
    const Algebra& alg = wb.algebra();
    std::map<std::size_t, HomKSpace> spaces;
    std::vector<Component> comps;
    for (auto id : s) {
        spaces[id] = hom_k(wb.object(id), a);
        for (const auto& b : spaces[id].basis) comps.push_back({id, b});
    }
    auto ok = [&](const std::vector<Component>& sel) {
        for (auto t : s) {
            const HomKSpace& target_space = spaces[t];
            if (target_space.dim() == 0) continue;
            std::vector<ChainMap> maps;
            for (const auto& c : sel)
                for (const auto& h : wb.hom(t, c.id).basis) maps.push_back(chain_compose(alg, h, c.map, a));
            if (class_rank(wb.object(t), a, target_space, maps) != target_space.dim()) return false;
        }
        return true;
    };
    if (!ok(comps)) throw InvariantError("universal map is not a right approximation");
    return assemble_right(wb, a, prune(comps, ok));
}

RigidityReport is_two_term_rigid(const Workbench& wb, const ObjSet& x) {
    RigidityReport r;
    for (auto i : x)
        for (auto j : x) {
            const bool k_zero = wb.shift_dim(i, j) == 0;
            const bool m_zero = wb.shift_dim_modules(i, j) == 0;
            if (k_zero != m_zero)
                throw InvariantError("rigidity tests disagree on (" + wb.label(i) + ", " + wb.label(j) + ")");
            if (!k_zero && r.rigid) {
                r.rigid = false;
                r.witness = {{i, j}};
            }
        }
    return r;
}

bool is_rigid(const Workbench& wb, const ObjSet& x) {
    for (auto i : x)
        for (auto j : x)
            if (wb.shift_dim(i, j) != 0) return false;
    return true;
}

std::vector<ObjSet> rigid_subcategories(const Workbench& wb, std::size_t max_size) {
    std::vector<ObjSet> out;
    ObjSet cur;
    auto go = [&](auto&& self, std::size_t start) -> void {
        out.push_back(cur);
        if (cur.size() == max_size) return;
        for (std::size_t i = start; i < wb.size(); ++i) {
            if (wb.shift_dim(i, i) != 0) continue;
            bool ok = true;
            for (auto j : cur) ok = ok && wb.shift_dim(i, j) == 0 && wb.shift_dim(j, i) == 0;
            if (!ok) continue;
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    go(go, 0);
    return out;
}

std::vector<int> r_annihilator(const Workbench& wb, const ObjSet& x) {
    std::vector<int> out;
    for (int v = 0; v < int(wb.vertex_count()); ++v) {
        bool zero = true;
        for (auto id : x) zero = zero && wb.hom(wb.stalk_id(v), id).dim() == 0;
        if (zero) out.push_back(v);
    }
    return out;
}

namespace {

bool cones_stay_in(const Workbench& wb, const ObjSet& x) {
    for (int v = 0; v < int(wb.vertex_count()); ++v) {
        const auto& p = wb.object(wb.stalk_id(v));
        auto f = left_approx_tt(wb, p, x);
        for (auto id : wb.identify(cone(p, f.target, f.map)))
            if (!std::binary_search(x.begin(), x.end(), id)) return false;
    }
    return true;
}

bool module_side_sttilt(const Workbench& wb, const ObjSet& x) {
    TauPair pair{sorted(wb.module_indices(x)), wb.e_part(x)};
    return support_tau_tilting_test(wb.atlas(), pair);
}

void assert_wct(const Workbench& wb, const ObjSet& x, const char* what) {
    if (!is_weak_cluster_tilting(wb, x))
        throw InvariantError(std::string(what) + " " + wb.describe(x) + " is not weak cluster tilting");
}

}  // namespace

bool is_weak_cluster_tilting(const Workbench& wb, const ObjSet& x) {
    require_rigid(wb, x);
    const bool k_side = cones_stay_in(wb, x);
    const bool m_side = module_side_sttilt(wb, x);
    if (k_side != m_side)
        throw InvariantError("weak cluster tilting tests disagree on " + wb.describe(x) + ": triangle test says " +
                             (k_side ? "yes" : "no") + ", support tau-tilting test says " + (m_side ? "yes" : "no"));
    return k_side;
}

Completion co_bongartz(const Workbench& wb, const ObjSet& x) {
    require_rigid(wb, x);
    Completion out;
    out.set = x;
    for (int v = 0; v < int(wb.vertex_count()); ++v) {
        const auto& p = wb.object(wb.stalk_id(v));
        auto f = left_approx_tt(wb, p, x);
        auto ids = wb.identify(cone(p, f.target, f.map));
        if (!set_intersection(make_set(ids), make_set(f.targets)).empty())
            throw InvariantError("minimal left approximation shares a summand with its cone");
        out.triangles.push_back({v, f.targets, ids});
        out.set = set_union(out.set, make_set(ids));
    }
    if (r_annihilator(wb, out.set) != r_annihilator(wb, x))
        throw InvariantError("R(M_X) differs from R(X) for X = " + wb.describe(x));
    assert_wct(wb, out.set, "M_X");
    return out;
}

Completion bongartz(const Workbench& wb, const ObjSet& x) {
    require_rigid(wb, x);
    Completion out;
    out.set = x;
    for (int v = 0; v < int(wb.vertex_count()); ++v) {
        const auto& s = wb.object(wb.shift_id(v));
        auto h = right_approx_tt(wb, s, x);
        auto ids = wb.identify(cocone(h.target, s, h.map));
        if (!set_intersection(make_set(ids), make_set(h.targets)).empty())
            throw InvariantError("minimal right approximation shares a summand with its cocone");
        out.triangles.push_back({v, h.targets, ids});
        out.set = set_union(out.set, make_set(ids));
    }
    if (wb.e_part(out.set) != wb.e_part(x))
        throw InvariantError("N_X picked up shifted projectives for X = " + wb.describe(x));
    assert_wct(wb, out.set, "N_X");
    return out;
}

std::vector<std::size_t> complements(const Workbench& wb, const ObjSet& x) {
    if (!wb.complete()) throw CapError("exhaustive completion search needs a complete atlas");
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < wb.size(); ++w) {
        if (std::binary_search(x.begin(), x.end(), w)) continue;
        if (wb.shift_dim(w, w) != 0) continue;
        bool ok = true;
        for (auto id : x) ok = ok && wb.shift_dim(w, id) == 0 && wb.shift_dim(id, w) == 0;
        if (!ok) continue;
        if (is_weak_cluster_tilting(wb, set_union(x, {w}))) out.push_back(w);
    }
    return out;
}

CompletionResult completions(const Workbench& wb, const ObjSet& x, bool exhaustive) {
    require_rigid(wb, x);
    if (is_weak_cluster_tilting(wb, x)) throw InputError("X is weak cluster tilting; nothing to complete");
    CompletionResult out;
    out.m_x = co_bongartz(wb, x);
    out.n_x = bongartz(wb, x);
    // Weak cluster tilting sets have exactly |Q_0| summands.
    out.almost_complete = x.size() + 1 == wb.vertex_count();
    if (exhaustive) {
        for (auto w : complements(wb, x)) out.all_completions.push_back(set_union(x, {w}));
        std::sort(out.all_completions.begin(), out.all_completions.end());
        std::vector<ObjSet> expected{out.m_x.set, out.n_x.set};
        std::sort(expected.begin(), expected.end());
        out.exactly_two = out.almost_complete && out.m_x.set != out.n_x.set && out.all_completions == expected;
    }
    return out;
}

MutationCertificate verify_mutation_pair(const Workbench& wb, const ObjSet& x, const ObjSet& m, const ObjSet& n) {
    MutationCertificate cert;
    auto fail = [&](const std::string& why) {
        cert.ok = false;
        cert.failures.push_back(why);
    };
    if (!set_contains(m, x) || !set_contains(n, x)) fail("M or N does not contain X");
    if (m == n) fail("M equals N");

    // Every map from a two-term Y to Z[1] is determined by its component Y^{-1} -> Z^0 and is
    // therefore the composite Y -> Y^{-1}[1] -> Z[1] through an object of R[1]. For the same
    // reason H(Z[1]) = 0, so the H-component of the connecting map vanishes. The content of
    // conditions (a) and (b) is that the cocone (resp. cone) is two-term and lands in N (resp. M).
    for (auto y : set_difference(m, x)) {
        MutationTriangle t;
        t.object = y;
        auto xa = right_approx_tt(wb, wb.object(y), x);
        t.middle = xa.targets;
        try {
            t.other = wb.identify(cocone(xa.target, wb.object(y), xa.map));
        } catch (const ModuleError&) {
            t.two_term = false;
        }
        for (auto z : t.other) t.other_in_target = t.other_in_target && std::binary_search(n.begin(), n.end(), z);
        if (!t.two_term) fail("cocone of the X-approximation of " + wb.label(y) + " is not two-term");
        if (!t.other_in_target) fail("cocone of the X-approximation of " + wb.label(y) + " leaves N");
        cert.m_side.push_back(t);
    }
    for (auto z : set_difference(n, x)) {
        MutationTriangle t;
        t.object = z;
        auto xa = left_approx_tt(wb, wb.object(z), x);
        t.middle = xa.targets;
        try {
            t.other = wb.identify(cone(wb.object(z), xa.target, xa.map));
        } catch (const ModuleError&) {
            t.two_term = false;
        }
        for (auto y : t.other) t.other_in_target = t.other_in_target && std::binary_search(m.begin(), m.end(), y);
        if (!t.two_term) fail("cone of the X-approximation of " + wb.label(z) + " is not two-term");
        if (!t.other_in_target) fail("cone of the X-approximation of " + wb.label(z) + " leaves M");
        cert.n_side.push_back(t);
    }
    cert.m_is_co_bongartz = co_bongartz(wb, x).set == m;
    cert.n_is_bongartz = bongartz(wb, x).set == n;
    if (!cert.m_is_co_bongartz) fail("M differs from M_X");
    if (!cert.n_is_bongartz) fail("N differs from N_X");
    return cert;
}

ObjSet mutate(const Workbench& wb, const ObjSet& m, std::size_t id) {
    if (!std::binary_search(m.begin(), m.end(), id)) throw InputError("mutation at an object outside the subcategory");
    ObjSet x = set_difference(m, {id});
    auto r = completions(wb, x, false);
    if (r.m_x.set == m) return r.n_x.set;
    if (r.n_x.set == m) return r.m_x.set;
    throw InvariantError("neither completion of " + wb.describe(x) + " is the starting subcategory");
}

ExchangeGraph exchange_graph(const Workbench& wb, std::size_t budget) {
    if (!wb.complete()) throw CapError("the exchange graph needs a complete atlas");
    ExchangeGraph g;
    std::map<ObjSet, std::size_t> index;
    std::map<ObjSet, bool> seen_x;
    auto add = [&](const ObjSet& s) -> std::optional<std::size_t> {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        if (g.vertices.size() >= budget) {
            g.complete = false;
            return std::nullopt;
        }
        index[s] = g.vertices.size();
        g.vertices.push_back(s);
        return g.vertices.size() - 1;
    };
    add(wb.projectives());
    for (std::size_t k = 0; k < g.vertices.size() && g.complete; ++k) {
        const ObjSet m = g.vertices[k];
        for (auto id : m) {
            ObjSet x = set_difference(m, {id});
            if (seen_x[x]) continue;
            seen_x[x] = true;
            auto r = completions(wb, x, false);
            auto up = add(r.n_x.set);
            auto lo = add(r.m_x.set);
            if (!up || !lo) break;
            g.edges.push_back({*up, *lo, x});
        }
    }
    return g;
}

}  // namespace reltilt
