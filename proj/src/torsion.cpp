#include "reltilt/torsion.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace reltilt {

namespace {

bool in_add(const Atlas& atlas, const Representation& m, const AtlasSet& s) {
    if (m.is_zero()) return true;
    for (auto i : atlas.locate_summands(m))
        if (!std::binary_search(s.begin(), s.end(), i)) return false;
    return true;
}

AtlasSet sorted_unique(AtlasSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

AtlasSet intersect(const AtlasSet& a, const AtlasSet& b) {
    AtlasSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool includes(const AtlasSet& big, const AtlasSet& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

template <class Pred>
AtlasSet filter_atlas(const Atlas& atlas, Pred pred) {
    AtlasSet out;
    for (std::size_t i = 0; i < atlas.size(); ++i)
        if (pred(atlas.modules[i])) out.push_back(i);
    return out;
}

std::vector<int> zero_vertices(const Atlas& atlas, const AtlasSet& s) {
    std::vector<int> out;
    for (int v = 0; v < int(atlas.alg->vertex_count()); ++v) {
        bool zero = true;
        for (auto i : s) zero = zero && atlas.modules[i].dims[std::size_t(v)] == 0;
        if (zero) out.push_back(v);
    }
    return out;
}

// Extensions inside T stay in T, probed on Ext^1 basis elements and their sum.
bool extension_probe(const Atlas& atlas, const AtlasSet& t) {
    for (auto c : t)
        for (auto a : t)
            for (const auto& e : extension_middles(atlas.modules[c], atlas.modules[a]))
                if (!in_add(atlas, e, t)) return false;
    return true;
}

bool is_left_approximation(const Representation& a, const Approximation& ap, const std::vector<Representation>& s) {
    for (const auto& t : s) {
        std::size_t need = hom_dim(a, t);
        if (need == 0) continue;
        std::vector<RepHom> through;
        for (const auto& g : hom_basis(ap.module, t)) through.push_back(compose(ap.map, g));
        if (span_dim(through) != need) return false;
    }
    return true;
}

bool is_epi(const Representation& m, const RepHom& f) { return cokernel(m, f).module.is_zero(); }

}  // namespace

std::vector<Representation> members(const Atlas& atlas, const AtlasSet& s) {
    std::vector<Representation> out;
    for (auto i : s) out.push_back(atlas.modules.at(i));
    return out;
}

void require_complete(const Atlas& atlas, const std::string& what) {
    if (!atlas.complete) throw CapError(what + " needs a complete atlas; raise the atlas budget");
}

AtlasSet fac_closure(const Atlas& atlas, const AtlasSet& s) {
    require_complete(atlas, "fac_closure");
    auto mods = members(atlas, s);
    return filter_atlas(atlas, [&](const Representation& a) { return in_fac(a, mods); });
}

bool presentation_surjective(const Representation& u, const Representation& m) {
    Presentation p = minimal_presentation(u);
    if (p.p1.empty()) return true;
    std::size_t need = hom_dim(p.P1, m);
    if (need == 0) return true;
    std::vector<RepHom> images;
    for (const auto& g : hom_basis(p.P0, m)) images.push_back(compose(p.d, g));
    return span_dim(images) == need;
}

AtlasSet perp_tau(const Atlas& atlas, const AtlasSet& u) {
    require_complete(atlas, "perp_tau");
    return filter_atlas(atlas, [&](const Representation& a) {
        for (auto i : u)
            if (!presentation_surjective(atlas.modules[i], a)) return false;
        return true;
    });
}

AtlasSet e_perp(const Atlas& atlas, const std::vector<int>& e) {
    return filter_atlas(atlas, [&](const Representation& a) {
        for (int v : e)
            if (a.dims.at(std::size_t(v)) != 0) return false;
        return true;
    });
}

bool is_tau_rigid_pair(const Atlas& atlas, const TauPair& pair) {
    for (auto i : pair.modules)
        for (auto j : pair.modules)
            if (!presentation_surjective(atlas.modules[i], atlas.modules[j])) return false;
    for (int v : pair.e)
        for (auto i : pair.modules)
            if (atlas.modules[i].dims.at(std::size_t(v)) != 0) return false;
    return true;
}

bool support_tau_tilting_test(const Atlas& atlas, const TauPair& pair) {
    if (!is_tau_rigid_pair(atlas, pair)) return false;
    if (zero_vertices(atlas, pair.modules) != pair.e) return false;
    auto mods = members(atlas, pair.modules);
    for (int v = 0; v < int(atlas.alg->vertex_count()); ++v) {
        Approximation ap = left_approximation(projective_module(atlas.alg, v), mods);
        if (ap.module.is_zero()) continue;
        if (!in_add(atlas, cokernel(ap.module, ap.map).module, pair.modules)) return false;
    }
    return true;
}

AtlasSet ext_left_perp(const Atlas& atlas, const AtlasSet& v) {
    auto mods = members(atlas, v);
    return filter_atlas(atlas, [&](const Representation& a) {
        for (const auto& x : mods)
            if (ext1_dim(a, x) != 0) return false;
        return true;
    });
}

AtlasSet ext_left_perp_ar(const Atlas& atlas, const AtlasSet& v) {
    auto mods = members(atlas, v);
    return filter_atlas(atlas, [&](const Representation& a) {
        Representation ta = tau(a);
        if (ta.is_zero()) return true;
        for (const auto& x : mods)
            if (stable_hom_dim_injective(x, ta) != 0) return false;
        return true;
    });
}

AtlasSet hom_right_perp(const Atlas& atlas, const AtlasSet& t) {
    auto mods = members(atlas, t);
    return filter_atlas(atlas, [&](const Representation& a) {
        for (const auto& x : mods)
            if (hom_dim(x, a) != 0) return false;
        return true;
    });
}

AtlasSet hom_left_perp(const Atlas& atlas, const AtlasSet& f) {
    auto mods = members(atlas, f);
    return filter_atlas(atlas, [&](const Representation& a) {
        for (const auto& x : mods)
            if (hom_dim(a, x) != 0) return false;
        return true;
    });
}

std::vector<Representation> extension_middles(const Representation& c, const Representation& a) {
    ProjectiveCover cov = projective_cover(c);
    SubmoduleResult omega = kernel(cov.module, cov.map);
    auto homs = hom_basis(omega.module, a);
    if (homs.empty()) return {};

    // Classes in Ext^1(C, A) = Hom(ΩC, A) / restrictions of Hom(P0, A).
    std::size_t n = hom_to_vector(homs.front()).size();
    Matrix restricted(0, n);
    for (const auto& g : hom_basis(cov.module, a)) restricted.append_row(hom_to_vector(compose(omega.inclusion, g)));
    Matrix q = complement_of(restricted, n).quotient;
    std::vector<RepHom> reps;
    Matrix classes(0, q.cols());
    for (const auto& h : homs) {
        Matrix row(0, n);
        row.append_row(hom_to_vector(h));
        Matrix trial = Matrix::vstack(classes, row * q);
        if (rank(trial) > classes.rows()) {
            classes = trial;
            reps.push_back(h);
        }
    }
    if (reps.size() > 1) {
        RepHom sum = reps.front();
        for (std::size_t k = 1; k < reps.size(); ++k) sum = hom_add(sum, reps[k]);
        reps.push_back(sum);
    }

    // Pushout of 0 -> ΩC -> P0 -> C -> 0 along g: (A ⊕ P0) / {(-g(x), x)}.
    Representation ambient = direct_sum(a, cov.module);
    std::vector<Representation> out;
    for (const auto& g : reps) {
        RepHom phi;
        for (std::size_t v = 0; v < a.dims.size(); ++v)
            phi.comps.push_back(Matrix::hstack(g.comps[v].scaled(fp::neg(1)), omega.inclusion.comps[v]));
        out.push_back(cokernel(ambient, phi).module);
    }
    return out;
}

bool is_quotient_closed(const Atlas& atlas, const AtlasSet& t) { return fac_closure(atlas, t) == t; }

bool is_torsion_class(const Atlas& atlas, const AtlasSet& t) {
    require_complete(atlas, "is_torsion_class");
    const bool torsion = hom_left_perp(atlas, hom_right_perp(atlas, t)) == t;
    if (torsion && !is_quotient_closed(atlas, t))
        throw InvariantError("double perpendicular class is not closed under quotients");
    if (torsion && !extension_probe(atlas, t))
        throw InvariantError("double perpendicular class is not closed under extensions");
    return torsion;
}

bool functorially_finite_witness(const Atlas& atlas, const AtlasSet& t) {
    auto mods = members(atlas, t);
    for (const auto& a : atlas.modules)
        if (!is_left_approximation(a, left_approximation(a, mods), mods)) return false;
    return true;
}

std::vector<AtlasSet> enumerate_torsion_classes(const Atlas& atlas, std::size_t cap) {
    require_complete(atlas, "torsion class enumeration");
    const std::size_t n = atlas.size();
    if (n > cap || n > 30)
        throw CapError("torsion class enumeration is capped at " + std::to_string(cap) + " indecomposables, atlas has " +
                       std::to_string(n));
    std::vector<std::uint32_t> hom_out(n, 0), hom_in(n, 0);  // bit j of hom_out[i]: Hom(M_i, M_j) != 0
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (hom_dim(atlas.modules[i], atlas.modules[j]) != 0) {
                hom_out[i] |= 1u << j;
                hom_in[j] |= 1u << i;
            }
    std::vector<AtlasSet> out;
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        std::uint32_t reach = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) reach |= hom_out[i];
        std::uint32_t perp = full & ~reach;
        std::uint32_t back = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (perp >> j & 1) back |= hom_in[j];
        if ((full & ~back) != mask) continue;
        AtlasSet t;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) t.push_back(i);
        if (!is_quotient_closed(atlas, t) || !extension_probe(atlas, t))
            throw InvariantError("enumerated class fails quotient or extension closure");
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TauPair tau_pair_of(const Workbench& wb, const ObjSet& x) {
    return {sorted_unique(wb.module_indices(x)), wb.e_part(x)};
}

std::vector<TauPair> support_tau_tilting_pairs(const Workbench& wb) {
    auto g = exchange_graph(wb);
    if (!g.complete) throw CapError("exchange graph exceeded its vertex budget");
    std::vector<TauPair> out;
    for (const auto& v : g.vertices) out.push_back(tau_pair_of(wb, v));
    std::sort(out.begin(), out.end());
    return out;
}

FacReport verify_fac_identities(const Workbench& wb, const ObjSet& x) {
    const Atlas& atlas = wb.atlas();
    FacReport r;
    TauPair xp = tau_pair_of(wb, x);
    r.fac_x = fac_closure(atlas, xp.modules);
    r.fac_m = fac_closure(atlas, tau_pair_of(wb, co_bongartz(wb, x).set).modules);
    r.fac_n = fac_closure(atlas, tau_pair_of(wb, bongartz(wb, x).set).modules);
    r.perp = intersect(perp_tau(atlas, xp.modules), e_perp(atlas, xp.e));
    r.m_identity = r.fac_m == r.fac_x;
    r.n_identity = r.fac_n == r.perp;
    r.weak_cluster_tilting = is_weak_cluster_tilting(wb, x);
    r.tau4_applicable = r_annihilator(wb, x) == xp.e;
    if (r.tau4_applicable) r.tau4 = r.weak_cluster_tilting == (r.perp == r.fac_x);
    if (!r.weak_cluster_tilting) r.strict = includes(r.fac_n, r.fac_m) && r.fac_n != r.fac_m;
    return r;
}

bool partial_order_ge(const Atlas& atlas, const TauPair& m, const TauPair& n) {
    return includes(fac_closure(atlas, m.modules), fac_closure(atlas, n.modules));
}

SandwichReport verify_sandwich(const Workbench& wb, const ObjSet& x, const ObjSet& l) {
    SandwichReport r;
    r.contains = set_contains(l, x);
    TauPair lp = tau_pair_of(wb, l);
    TauPair mp = tau_pair_of(wb, co_bongartz(wb, x).set);
    TauPair np = tau_pair_of(wb, bongartz(wb, x).set);
    r.between = partial_order_ge(wb.atlas(), np, lp) && partial_order_ge(wb.atlas(), lp, mp);
    return r;
}

CotorsionTorsionPair cotorsion_from_sttilt(const Atlas& atlas, const TauPair& m) {
    require_complete(atlas, "cotorsion_from_sttilt");
    CotorsionTorsionPair r;
    r.v = fac_closure(atlas, m.modules);
    r.u = ext_left_perp(atlas, r.v);
    const AtlasSet uv = intersect(r.u, r.v);
    const auto umods = members(atlas, r.u);
    const auto vmods = members(atlas, r.v);

    r.a1 = r.u == ext_left_perp_ar(atlas, r.v);

    r.a2 = true;
    for (int v = 0; v < int(atlas.alg->vertex_count()) && r.a2; ++v) {
        Approximation ap = left_approximation(projective_module(atlas.alg, v), vmods);
        for (auto t : ap.targets) r.a2 = r.a2 && std::binary_search(uv.begin(), uv.end(), r.v[t]);
        if (!ap.module.is_zero()) r.a2 = r.a2 && in_add(atlas, cokernel(ap.module, ap.map).module, r.u);
    }

    r.b1 = true;
    for (const auto& u : umods)
        for (const auto& v : vmods) r.b1 = r.b1 && ext1_dim(u, v) == 0;

    // A special precover or preenvelope exists iff the minimal one is special: the minimal
    // approximation is a summand and the extra summand shows up in the kernel or cokernel.
    r.b2 = true;
    for (const auto& a : atlas.modules) {
        if (!r.b2) break;
        Approximation right = right_approximation(a, umods);
        if (!is_epi(a, right.map)) {
            r.b2 = false;
            break;
        }
        r.b2 = in_add(atlas, kernel(right.module, right.map).module, r.v);
        Approximation left = left_approximation(a, vmods);
        if (!left.module.is_zero()) r.b2 = r.b2 && in_add(atlas, cokernel(left.module, left.map).module, r.u);
    }

    r.c1 = is_quotient_closed(atlas, r.v);
    r.c1_prime = is_torsion_class(atlas, r.v);
    r.c2 = extension_probe(atlas, r.v);
    r.round_trip = uv == m.modules;
    return r;
}

BijectionReport verify_bijections(const Workbench& wb, std::size_t subset_cap) {
    const Atlas& atlas = wb.atlas();
    require_complete(atlas, "verify_bijections");
    BijectionReport r;
    auto pairs = support_tau_tilting_pairs(wb);
    r.pairs = pairs.size();
    std::set<AtlasSet> facs;
    r.recovers = true;
    r.functorially_finite = true;
    for (const auto& p : pairs) {
        AtlasSet t = fac_closure(atlas, p.modules);
        facs.insert(t);
        if (!is_torsion_class(atlas, t)) r.failures.push_back("Fac of a support tau-tilting module is not a torsion class");
        if (!functorially_finite_witness(atlas, t)) r.functorially_finite = false;
        if (intersect(ext_left_perp(atlas, t), t) != p.modules) r.recovers = false;
        auto ctp = cotorsion_from_sttilt(atlas, p);
        if (ctp.tau_cotorsion_torsion()) ++r.tau_cotorsion_torsion;
        if (ctp.left_weak_cotorsion_torsion()) ++r.left_weak_cotorsion_torsion;
        if (!ctp.ok()) r.failures.push_back("cotorsion conditions fail for a support tau-tilting pair");
    }
    r.fac_images = facs.size();
    r.injective = r.fac_images == r.pairs;
    if (!r.injective) r.failures.push_back("M -> Fac M is not injective");
    if (!r.recovers) r.failures.push_back("⊥1T ∩ T does not recover M");
    if (!r.functorially_finite) r.failures.push_back("missing left approximation witness");
    if (r.tau_cotorsion_torsion != r.pairs || r.left_weak_cotorsion_torsion != r.pairs)
        r.failures.push_back("cotorsion torsion pair counts differ from the pair count");

    if (atlas.size() <= subset_cap) {
        auto classes = enumerate_torsion_classes(atlas, subset_cap);
        r.torsion_classes = classes.size();
        r.surjectivity_checked = true;
        r.surjective = std::set<AtlasSet>(classes.begin(), classes.end()) == facs;
        if (!r.surjective) r.failures.push_back("some torsion class is not Fac of a support tau-tilting module");
        for (const auto& t : classes) {
            TauPair back{intersect(ext_left_perp(atlas, t), t), {}};
            back.e = zero_vertices(atlas, back.modules);
            if (!support_tau_tilting_test(atlas, back))
                r.failures.push_back("⊥1T ∩ T is not support tau-tilting for an enumerated torsion class");
        }
    }
    return r;
}

LeftBongartz left_bongartz(const Workbench& wb, const ObjSet& x, const TauPair& l, std::size_t dim_cap) {
    const Atlas& atlas = wb.atlas();
    require_complete(atlas, "left_bongartz");
    TauPair np = tau_pair_of(wb, bongartz(wb, x).set);
    if (!partial_order_ge(atlas, np, l)) throw InputError("left Bongartz completion needs N_X >= L");
    TauPair xp = tau_pair_of(wb, x);
    auto xmods = members(atlas, xp.modules);
    auto lmods = members(atlas, l.modules);

    LeftBongartz r;
    r.t = filter_atlas(atlas, [&](const Representation& a) {
        for (const auto& spans : subobject_list(a, dim_cap)) {
            if (in_fac(submodule(a, spans).module, xmods) && in_fac(quotient(a, spans).module, lmods)) return true;
        }
        return false;
    });
    r.result.modules = intersect(ext_left_perp(atlas, r.t), r.t);
    r.result.e = zero_vertices(atlas, r.result.modules);
    r.support_tau_tilting = support_tau_tilting_test(atlas, r.result);
    r.contains_x = includes(r.result.modules, xp.modules) &&
                   std::includes(r.result.e.begin(), r.result.e.end(), xp.e.begin(), xp.e.end());
    return r;
}

}  // namespace reltilt
