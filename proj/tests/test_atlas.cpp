#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "reltilt/atlas.hpp"

using namespace reltilt;

namespace {

// String modules of linear A_n with paths of length k zero (k = 0: none) are the
// intervals [a, b] of at most k vertices.
std::set<std::vector<std::size_t>> interval_oracle(int n, int k) {
    std::set<std::vector<std::size_t>> out;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            if (k > 0 && b - a + 1 > k) continue;
            std::vector<std::size_t> d(std::size_t(n), 0);
            for (int v = a; v <= b; ++v) d[std::size_t(v)] = 1;
            out.insert(d);
        }
    return out;
}

std::set<std::vector<std::size_t>> dim_vectors(const Atlas& at) {
    std::set<std::vector<std::size_t>> out;
    for (const auto& m : at.modules) out.insert(m.dims);
    return out;
}

}  // namespace

TEST_CASE("linear quivers: intervals, n(n+1)/2 of them") {
    for (int n = 1; n <= 5; ++n) {
        auto at = knit_atlas(fixtures::linear(n));
        CHECK(at.complete);
        CHECK(at.size() == std::size_t(n * (n + 1) / 2));
        CHECK(dim_vectors(at) == interval_oracle(n, 0));
    }
    auto a2 = knit_atlas(fixtures::linear(2));
    CHECK(std::set<std::string>(a2.labels.begin(), a2.labels.end()) == std::set<std::string>{"11", "10", "01"});
    auto a3 = knit_atlas(fixtures::linear(3));
    CHECK(a3.labels == std::vector<std::string>{"111", "011", "001", "110", "010", "100"});
}

TEST_CASE("truncated linear quivers match the string-module count") {
    for (auto [n, k] : {std::pair{4, 3}, {4, 2}, {5, 3}, {6, 4}}) {
        auto at = knit_atlas(fixtures::linear(n, k));
        CHECK(at.complete);
        CHECK(dim_vectors(at) == interval_oracle(n, k));
    }
    CHECK(knit_atlas(fixtures::linear(4, 3)).size() == 9);
}

TEST_CASE("other representation-finite algebras") {
    CHECK(knit_atlas(fixtures::cycle3()).size() == 6);
    // Commutative square: the 11 indecomposables of its known AR quiver.
    auto sq = knit_atlas(fixtures::square());
    CHECK(sq.size() == 11);
    CHECK(dim_vectors(sq).count({1, 1, 1, 1}) == 1);
    CHECK(dim_vectors(sq).count({0, 1, 1, 1}) == 1);
    CHECK(dim_vectors(sq).count({1, 1, 1, 0}) == 1);
}

TEST_CASE("atlas invariants: indecomposable, pairwise non-isomorphic, closed under tau") {
    for (auto alg : {fixtures::linear(4, 3), fixtures::cycle3(), fixtures::square()}) {
        auto at = knit_atlas(alg);
        for (std::size_t i = 0; i < at.size(); ++i) {
            CHECK(is_indecomposable(at.modules[i]));
            CHECK(at.find(at.modules[i]) == i);
            for (std::size_t j = i + 1; j < at.size(); ++j) CHECK_FALSE(isomorphic(at.modules[i], at.modules[j]));
            if (!is_projective(at.modules[i])) CHECK(at.find(tau(at.modules[i])).has_value());
        }
        for (int v = 0; v < int(alg->vertex_count()); ++v) {
            CHECK(at.find(projective_module(alg, v)).has_value());
            CHECK(at.find(injective_module(alg, v)).has_value());
        }
    }
}

TEST_CASE("almost split sequences") {
    auto at = knit_atlas(fixtures::linear(3));
    auto label = [&](const std::string& l) {
        return at.modules[std::size_t(std::find(at.labels.begin(), at.labels.end(), l) - at.labels.begin())];
    };
    // 0 -> 001 -> 011 -> 010 -> 0 and 0 -> 011 -> 111 + 010 -> 110 -> 0.
    auto short_seq = almost_split_sequence(label("010"));
    CHECK(isomorphic(short_seq.left, label("001")));
    CHECK(isomorphic(short_seq.middle, label("011")));
    auto ar = almost_split_sequence(label("110"));
    CHECK(isomorphic(ar.left, tau(label("110"))));
    CHECK(isomorphic(ar.left, label("011")));
    CHECK(isomorphic(ar.middle, direct_sum(label("111"), label("010"))));
    CHECK(ar.middle.total_dim() == ar.left.total_dim() + ar.right.total_dim());
}

TEST_CASE("representation-infinite algebras stop at the budget") {
    auto k = knit_atlas(fixtures::kronecker(), 20);
    CHECK_FALSE(k.complete);
    CHECK(k.size() <= 20);
    // A regular module is never reached from the projectives.
    Representation reg = simple_module(k.alg, 0);
    reg.dims = {1, 1};
    reg.maps = {Matrix::identity(1), Matrix::identity(1)};
    validate_module(reg);
    CHECK_FALSE(k.find(reg).has_value());
    CHECK_THROWS(k.locate_summands(reg));
}
