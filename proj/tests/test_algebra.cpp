#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "reltilt/representation.hpp"

using namespace reltilt;

namespace {

// Paths of a monomial algebra counted directly: all words in the quiver that avoid
// every zero relation as a contiguous subword.
std::size_t monomial_dim_oracle(const Quiver& q, const std::vector<Relation>& rels) {
    auto avoids = [&](const std::vector<int>& w) {
        for (const auto& r : rels) {
            const auto& z = r.front().arrows;
            if (z.size() > w.size()) continue;
            for (std::size_t s = 0; s + z.size() <= w.size(); ++s)
                if (std::equal(z.begin(), z.end(), w.begin() + std::ptrdiff_t(s))) return false;
        }
        return true;
    };
    std::size_t count = q.vertices.size();
    std::vector<std::vector<int>> frontier;
    for (int a = 0; a < int(q.arrows.size()); ++a) frontier.push_back({a});
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (auto& w : frontier) {
            if (!avoids(w)) continue;
            ++count;
            for (int a = 0; a < int(q.arrows.size()); ++a)
                if (q.arrows[std::size_t(a)].source == q.arrows[std::size_t(w.back())].target) {
                    auto longer = w;
                    longer.push_back(a);
                    next.push_back(longer);
                }
        }
        frontier = std::move(next);
    }
    return count;
}

Element random_element(std::mt19937& rng, const Algebra& alg) {
    Element x(alg.dim());
    for (auto& c : x) c = rng() % 5 == 0 ? 0 : Scalar(rng() % fp::prime());
    return x;
}

}  // namespace

TEST_CASE("dimensions of path algebras") {
    CHECK(fixtures::linear(2)->dim() == 3);
    CHECK(fixtures::linear(3)->dim() == 6);
    CHECK(fixtures::linear(4, 3)->dim() == 9);
    CHECK(fixtures::cycle3()->dim() == 6);
    CHECK(fixtures::square()->dim() == 9);

    for (auto alg : {fixtures::linear(3), fixtures::linear(5, 2), fixtures::linear(6, 4), fixtures::cycle3()})
        CHECK(alg->dim() == monomial_dim_oracle(alg->quiver(), alg->relations()));
}

TEST_CASE("idempotents and composition") {
    auto a2 = fixtures::linear(2);
    auto e1 = a2->basis_element(a2->idempotent(0));
    auto e2 = a2->basis_element(a2->idempotent(1));
    CHECK(a2->multiply(e1, e1) == e1);
    CHECK(element_is_zero(a2->multiply(e1, e2)));
    auto x = a2->basis_element(*a2->index_of(Path{0, 1, {0}}));
    CHECK(a2->multiply(e1, x) == x);
    CHECK(a2->multiply(x, e2) == x);
    CHECK(element_is_zero(a2->multiply(x, e1)));
    CHECK(a2->path_name(a2->idempotent(0)) == "e1");
    CHECK(a2->path_name(*a2->index_of(Path{0, 1, {0}})) == "x1");

    auto a3 = fixtures::linear(3);
    auto x1 = a3->basis_element(*a3->index_of(Path{0, 1, {0}}));
    auto x2 = a3->basis_element(*a3->index_of(Path{1, 2, {1}}));
    auto x12 = a3->multiply(x1, x2);
    CHECK(a3->path_name(*a3->index_of(Path{0, 2, {0, 1}})) == "x1*x2");
    CHECK(x12 == a3->basis_element(*a3->index_of(Path{0, 2, {0, 1}})));
    CHECK(element_is_zero(a3->multiply(x2, x1)));

    auto trunc = fixtures::linear(3, 2);
    CHECK(element_is_zero(trunc->multiply(trunc->basis_element(*trunc->index_of(Path{0, 1, {0}})),
                                          trunc->basis_element(*trunc->index_of(Path{1, 2, {1}})))));
}

TEST_CASE("commutativity relation picks one normal form") {
    auto sq = fixtures::square();
    auto ab = sq->reduce(0, {0, 1});
    auto cd = sq->reduce(0, {2, 3});
    CHECK(ab == cd);
    CHECK(sq->paths_between(0, 3).size() == 1);
}

TEST_CASE("build errors") {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 0}};
    // Oriented cycle without relations is infinite-dimensional.
    CHECK_THROWS_AS(Algebra::build(q, {}), AlgebraError);
    // A relation whose terms do not share endpoints.
    CHECK_THROWS_AS(Algebra::build(q, {{{1, {0, 1}}, {1, {1, 0}}}}), AlgebraError);
    // Length-one relation makes the ideal non-admissible.
    CHECK_THROWS_AS(Algebra::build(q, {{{1, {0}}}}), AlgebraError);
    CHECK_NOTHROW(Algebra::build(q, {{{1, {0, 1}}}, {{1, {1, 0}}}}));
}

TEST_CASE("property: dim A is the sum of the projective dimensions") {
    for (auto alg : {fixtures::linear(4), fixtures::linear(4, 3), fixtures::cycle3(), fixtures::square(),
                     fixtures::kronecker()}) {
        std::size_t total = 0;
        for (int v = 0; v < int(alg->vertex_count()); ++v) {
            auto p = projective_module(alg, v);
            validate_module(p);
            total += p.total_dim();
            std::size_t from_v = 0;
            for (int w = 0; w < int(alg->vertex_count()); ++w) {
                CHECK(p.dims[std::size_t(w)] == alg->paths_between(v, w).size());
                from_v += alg->paths_between(v, w).size();
            }
            CHECK(from_v == p.total_dim());
        }
        CHECK(total == alg->dim());
    }
    // Projective dimension vectors of linear A3.
    auto a3 = fixtures::linear(3);
    CHECK(projective_module(a3, 0).dims == std::vector<std::size_t>{1, 1, 1});
    CHECK(projective_module(a3, 2).dims == std::vector<std::size_t>{0, 0, 1});
}

TEST_CASE("property: multiplication is associative and unital") {
    std::mt19937 rng(17);
    for (auto alg : {fixtures::linear(4, 3), fixtures::cycle3(), fixtures::square()}) {
        Element one = alg->zero();
        for (int v = 0; v < int(alg->vertex_count()); ++v) one = element_add(one, alg->basis_element(alg->idempotent(v)));
        for (int t = 0; t < 40; ++t) {
            auto a = random_element(rng, *alg), b = random_element(rng, *alg), c = random_element(rng, *alg);
            CHECK(alg->multiply(alg->multiply(a, b), c) == alg->multiply(a, alg->multiply(b, c)));
            CHECK(alg->multiply(one, a) == a);
            CHECK(alg->multiply(a, one) == a);
            CHECK(alg->multiply(a, element_add(b, c)) == element_add(alg->multiply(a, b), alg->multiply(a, c)));
        }
    }
}

TEST_CASE("opposite algebra") {
    auto a3 = fixtures::linear(3, 2);
    auto op = a3->opposite();
    CHECK(op->dim() == a3->dim());
    CHECK(op->paths_between(2, 1).size() == 1);
    CHECK(op->paths_between(1, 2).empty());
    CHECK(op->opposite()->dim() == a3->dim());
}
