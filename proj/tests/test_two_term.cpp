#include <doctest.h>

#include "fixtures.hpp"
#include "reltilt/atlas.hpp"
#include "reltilt/two_term.hpp"

using namespace reltilt;

namespace {

Element arrow_element(const AlgebraPtr& alg, int a) {
    const Arrow& ar = alg->quiver().arrows[a];
    return alg->basis_element(*alg->index_of(Path{ar.source, ar.target, {a}}));
}

Element unit(const AlgebraPtr& alg, int v) { return alg->basis_element(alg->idempotent(v)); }

// (P2 -> P1) over A2, the minimal presentation of S1.
TwoTermComplex u_a2(const AlgebraPtr& a2) { return TwoTermComplex{a2, {1}, {0}, {{arrow_element(a2, 0)}}}; }

}  // namespace

TEST_CASE("minimal form cancels identity blocks") {
    auto a2 = fixtures::linear(2);
    TwoTermComplex id{a2, {0}, {0}, {{unit(a2, 0)}}};
    CHECK(minimal_form(id).is_zero());

    TwoTermComplex u = u_a2(a2);
    auto m = minimal_form(u);
    CHECK(m.p1 == u.p1);
    CHECK(m.p0 == u.p0);

    // (P1 + P2 -> P1 + P1) with an identity on one P1 and the arrow on P2: only the arrow survives.
    TwoTermComplex mixed{a2, {0, 1}, {0, 0}, {{unit(a2, 0), a2->zero()}, {arrow_element(a2, 0), arrow_element(a2, 0)}}};
    auto r = minimal_form(mixed);
    CHECK(r.p1 == ProjSum{1});
    CHECK(r.p0 == ProjSum{0});
    CHECK(is_minimal(r));
    CHECK(isomorphic_complexes(r, u));
}

TEST_CASE("homotopy Hom examples over A2") {
    auto a2 = fixtures::linear(2);
    auto u = u_a2(a2);
    CHECK(hom_k_shift1_dim(u, u) == 0);
    CHECK(hom_k(stalk(a2, 0), u).dim() == 1);
    CHECK(hom_k(u, u).dim() == 1);
    // The non-rigid pair {P2, P2[1]}: the witness lives in Hom_K(P2[1], P2[1]), not the reverse order.
    CHECK(hom_k_shift1_dim(stalk(a2, 1), shifted_stalk(a2, 1)) == 0);
    CHECK(hom_k_shift1_dim(shifted_stalk(a2, 1), stalk(a2, 1)) == 1);
    CHECK(hom_k_shift1_dim(u, shifted_stalk(a2, 1)) == 0);
    CHECK(hom_k_shift1_dim(shifted_stalk(a2, 1), u) == 0);
    CHECK(hom_k_shift1_dim(stalk(a2, 0), stalk(a2, 1)) == 0);
    for (const auto& f : hom_k(u, u).basis) CHECK(is_chain_map(u, u, f));
}

TEST_CASE("cones and cocones over A2") {
    auto a2 = fixtures::linear(2);
    auto u = u_a2(a2);
    auto s1 = stalk(a2, 0);
    auto s2 = stalk(a2, 1);

    ChainMap arrow{{}, {{arrow_element(a2, 0)}}};
    CHECK(is_chain_map(s2, s1, arrow));
    auto c = cone(s2, s1, arrow);
    CHECK(isomorphic_complexes(c, u));

    ChainMap can{pm_zero(*a2, 0, 1), {{unit(a2, 0)}}};
    CHECK(is_chain_map(s1, u, can));
    auto c2 = cone(s1, u, can);
    CHECK(c2.p1 == ProjSum{1});
    CHECK(c2.p0.empty());

    CHECK(cone(u, u, chain_identity(u)).is_zero());

    auto p2s = shifted_stalk(a2, 1);
    ChainMap h{{{unit(a2, 1)}}, pm_zero(*a2, 1, 0)};
    CHECK(is_chain_map(u, p2s, h));
    auto cc = cocone(u, p2s, h);
    CHECK(cc.p1.empty());
    CHECK(cc.p0 == ProjSum{0});

    auto split = cocone(u, p2s, chain_zero(u, p2s));
    CHECK(isomorphic_complexes(split, complex_sum({u, s2})));
}

TEST_CASE("H functor and decomposition") {
    auto a2 = fixtures::linear(2);
    auto h = h_functor(u_a2(a2));
    CHECK(h.module.dims == std::vector<std::size_t>{1, 0});
    CHECK(h.e_part == std::vector<std::size_t>{0, 0});
    auto hs = h_functor(shifted_stalk(a2, 1));
    CHECK(hs.module.is_zero());
    CHECK(hs.e_part == std::vector<std::size_t>{0, 1});
    auto parts = decompose_two_term(complex_sum({stalk(a2, 0), shifted_stalk(a2, 1)}));
    CHECK(parts.size() == 2);
}

TEST_CASE("shift Hom agrees with the module-side cokernel on atlas presentations") {
    for (auto alg : {fixtures::linear(3), fixtures::linear(4, 3), fixtures::cycle3(), fixtures::square()}) {
        auto at = knit_atlas(alg);
        std::vector<TwoTermComplex> objs;
        for (const auto& m : at.modules) objs.push_back(presentation_complex(m));
        for (int v = 0; v < int(alg->vertex_count()); ++v) objs.push_back(shifted_stalk(alg, v));
        for (const auto& a : objs)
            for (const auto& b : objs) CHECK(hom_k_shift1_dim(a, b) == shift1_dim_via_modules(a, b));
    }
}
