#include <doctest.h>

#include <random>
#include <set>

#include "reltilt/matrix.hpp"
#include "reltilt/poly.hpp"

using namespace reltilt;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int zero_bias = 0) {
    Matrix m(r, c);
    std::uniform_int_distribution<std::uint32_t> coef(0, fp::prime() - 1);
    std::uniform_int_distribution<int> coin(0, 9);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = coin(rng) < zero_bias ? 0 : coef(rng);
    return m;
}

// Size of the row space, counted by enumerating all combinations of rows.
std::size_t row_space_size(const Matrix& a) {
    const std::uint32_t p = fp::prime();
    std::set<std::vector<Scalar>> seen;
    std::vector<Scalar> coeffs(a.rows(), 0);
    while (true) {
        std::vector<Scalar> v(a.cols(), 0);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) v[j] = fp::add(v[j], fp::mul(coeffs[i], a(i, j)));
        seen.insert(v);
        std::size_t k = 0;
        while (k < coeffs.size() && ++coeffs[k] == p) coeffs[k++] = 0;
        if (k == coeffs.size()) break;
    }
    return seen.size();
}

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

TEST_CASE("field arithmetic") {
    PrimeGuard g(7);
    CHECK(fp::mul(3, 5) == 1);
    CHECK(fp::inv(3) == 5);
    CHECK(fp::neg(0) == 0);
    CHECK(fp::from_int(-1) == 6);
    CHECK(fp::to_signed(6) == -1);
    CHECK(fp::pow(3, 6) == 1);
    CHECK_THROWS(fp::inv(0));
    CHECK_THROWS(fp::set_prime(9));
    CHECK(fp::is_prime(32003));
    CHECK_FALSE(fp::is_prime(32001));
}

TEST_CASE("rref examples") {
    auto id = rref(Matrix::identity(3));
    CHECK(id.reduced == Matrix::identity(3));
    CHECK(id.rank == 3);

    auto z = rref(Matrix(3, 2));
    CHECK(z.rank == 0);
    CHECK(z.reduced.is_zero());

    PrimeGuard g(5);
    auto r = rref(Matrix::from_rows({{1, 2}, {2, 4}}));
    CHECK(r.rank == 1);
    CHECK(r.reduced == Matrix::from_rows({{1, 2}, {0, 0}}));
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("solve examples") {
    auto b = Matrix::from_rows({{4}, {7}});
    auto s = solve(Matrix::identity(2), b);
    REQUIRE(s.solution);
    CHECK(*s.solution == b);
    CHECK(s.kernel.rows() == 0);

    auto zero = solve(Matrix(2, 2), Matrix(2, 1));
    REQUIRE(zero.solution);
    CHECK(zero.kernel.rows() == 2);
    CHECK_FALSE(solve(Matrix(2, 2), b).solution);
    CHECK_THROWS_AS(solve(Matrix(3, 2), b), DimensionError);

    // Over F_3 the kernel of [1 1] is the line through (1, 2); enumerate F_3^2 to confirm.
    PrimeGuard g(3);
    auto k = solve(Matrix::from_rows({{1, 1}}), Matrix(1, 1)).kernel;
    REQUIRE(k.rows() == 1);
    std::set<std::pair<Scalar, Scalar>> from_basis, brute;
    for (Scalar c = 0; c < 3; ++c) from_basis.insert({fp::mul(c, k(0, 0)), fp::mul(c, k(0, 1))});
    for (Scalar x = 0; x < 3; ++x)
        for (Scalar y = 0; y < 3; ++y)
            if (fp::add(x, y) == 0) brute.insert({x, y});
    CHECK(from_basis == brute);
    CHECK(brute.count({1, 2}) == 1);
}

TEST_CASE("sum and intersection of subspaces") {
    PrimeGuard g(2);
    auto u = Matrix::from_rows({{1, 0, 0}, {0, 1, 0}});
    auto v = Matrix::from_rows({{0, 1, 0}, {0, 0, 1}});
    auto si = subspace_sum_intersect(u, v);
    CHECK(rank(si.sum) == 3);
    CHECK(rank(si.intersection) == 1);
    CHECK(row_space_contains(si.intersection, Matrix::from_rows({{0, 1, 0}})));
}

TEST_CASE("complement and quotient map") {
    auto w = Matrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}});
    auto c = complement_of(w, 4);
    CHECK(c.complement.rows() == 2);
    CHECK(rank(Matrix::vstack(w, c.complement)) == 4);
    CHECK(c.quotient.rows() == 4);
    CHECK((w * c.quotient).is_zero());
    CHECK(rank(c.quotient) == 2);
}

TEST_CASE("property: rank agrees with a brute row-space count over small fields") {
    std::mt19937 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeGuard g(p);
        for (int t = 0; t < 60; ++t) {
            std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
            auto a = random_matrix(rng, r, c, 4);
            CHECK(row_space_size(a) == ipow(p, rank(a)));
        }
    }
}

TEST_CASE("property: rref is idempotent, rank is transpose invariant, solve is exact") {
    std::mt19937 rng(5);
    for (std::uint32_t p : {2u, 7u, 32003u}) {
        PrimeGuard g(p);
        for (int t = 0; t < 200; ++t) {
            std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            auto a = random_matrix(rng, r, c, int(rng() % 8));
            auto once = rref(a);
            CHECK(rref(once.reduced).reduced == once.reduced);
            CHECK(rank(a) == rank(a.transpose()));
            CHECK(once.rank == once.pivots.size());

            auto k = kernel(a);
            CHECK(k.rows() == c - once.rank);
            if (k.rows() > 0) CHECK((a * k.transpose()).is_zero());
            auto lk = left_kernel(a);
            CHECK(lk.rows() == r - once.rank);
            if (lk.rows() > 0) CHECK((lk * a).is_zero());

            // B in the column space of A is always solvable.
            auto x0 = random_matrix(rng, c, 2);
            auto b = a * x0;
            auto s = solve(a, b);
            REQUIRE(s.solution);
            CHECK(a * *s.solution == b);
            auto y = solve_left(a, Matrix(2, r) * a);
            REQUIRE(y);
        }
    }
}

TEST_CASE("property: dimension formula for sum and intersection") {
    std::mt19937 rng(3);
    PrimeGuard g(3);
    for (int t = 0; t < 150; ++t) {
        std::size_t n = 1 + rng() % 5;
        auto u = random_matrix(rng, 1 + rng() % 4, n, 5);
        auto v = random_matrix(rng, 1 + rng() % 4, n, 5);
        auto si = subspace_sum_intersect(u, v);
        CHECK(rank(si.sum) + rank(si.intersection) == rank(u) + rank(v));
        if (si.intersection.rows() > 0) {
            CHECK(row_space_contains(u, si.intersection));
            CHECK(row_space_contains(v, si.intersection));
        }
        CHECK(row_space_contains(si.sum, u));
        CHECK(row_space_contains(si.sum, v));
    }
}

TEST_CASE("nilpotence") {
    auto n = Matrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(is_nilpotent(n));
    CHECK(matrix_power(n, 3).is_zero());
    CHECK_FALSE(matrix_power(n, 2).is_zero());
    CHECK_FALSE(is_nilpotent(Matrix::identity(2)));
    CHECK(matrix_power(Matrix::identity(2), 0) == Matrix::identity(2));
}

TEST_CASE("polynomials: division, gcd, Cayley-Hamilton and factor splitting") {
    PrimeGuard g(7);
    // (x - 1)(x - 2) = x^2 - 3x + 2
    poly::Poly f{2, fp::from_int(-3), 1};
    poly::Poly l1{fp::from_int(-1), 1}, l2{fp::from_int(-2), 1};
    CHECK(poly::mul(l1, l2) == f);
    CHECK(poly::mod(f, l1).empty());
    CHECK(poly::div(f, l1) == l2);
    CHECK(poly::gcd(f, poly::mul(l1, l1)) == l1);
    CHECK(poly::derivative(f) == poly::Poly{fp::from_int(-3), 2});
    CHECK(poly::squarefree_part(poly::mul(f, l1)) == f);
    CHECK(poly::degree({}) == -1);

    std::mt19937_64 rng(1);
    auto factor = poly::proper_factor(f, rng);
    REQUIRE(factor);
    CHECK((*factor == l1 || *factor == l2));
    CHECK_FALSE(poly::proper_factor(poly::Poly{1, 0, 1}, rng));  // x^2 + 1 is irreducible mod 7

    std::mt19937 mrng(9);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + mrng() % 5;
        auto a = random_matrix(mrng, n, n);
        auto chi = poly::charpoly(a);
        CHECK(poly::degree(chi) == int(n));
        CHECK(poly::evaluate(chi, a).is_zero());
    }
}
