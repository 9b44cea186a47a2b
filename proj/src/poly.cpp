#include "reltilt/poly.hpp"

namespace reltilt::poly {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return int(a.size()) - 1; }

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = fp::add(r[i + j], fp::mul(a[i], b[j]));
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = fp::sub(r[i], b[i]);
    trim(r);
    return r;
}

static void divmod(const Poly& a, const Poly& m, Poly& q, Poly& r) {
    if (m.empty()) throw std::domain_error("polynomial division by zero");
    r = a;
    trim(r);
    q.assign(r.size() >= m.size() ? r.size() - m.size() + 1 : 0, 0);
    Scalar li = fp::inv(m.back());
    while (r.size() >= m.size()) {
        std::size_t shift = r.size() - m.size();
        Scalar c = fp::mul(r.back(), li);
        q[shift] = c;
        for (std::size_t i = 0; i < m.size(); ++i) r[shift + i] = fp::sub(r[shift + i], fp::mul(c, m[i]));
        trim(r);
    }
    trim(q);
}

Poly mod(const Poly& a, const Poly& m) {
    Poly q, r;
    divmod(a, m, q, r);
    return r;
}

Poly div(const Poly& a, const Poly& m) {
    Poly q, r;
    divmod(a, m, q, r);
    return q;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Scalar li = fp::inv(a.back());
        for (auto& c : a) c = fp::mul(c, li);
    }
    return a;
}

Poly derivative(const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = fp::mul(a[i], fp::from_int(std::int64_t(i)));
    trim(r);
    return r;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    Poly r = mod(Poly{1}, m);
    Poly b = mod(base, m);
    while (e > 0) {
        if (e & 1) r = mod(mul(r, b), m);
        e >>= 1;
        if (e) b = mod(mul(b, b), m);
    }
    return r;
}

Poly charpoly(const Matrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionError("charpoly needs a square matrix");
    Matrix h = a;
    // Reduce to upper Hessenberg form by similarity.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t i = j + 1;
        while (i < n && h(i, j) == 0) ++i;
        if (i == n) continue;
        if (i != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, j + 1));
        }
        Scalar iv = fp::inv(h(j + 1, j));
        for (std::size_t r = j + 2; r < n; ++r) {
            Scalar u = fp::mul(h(r, j), iv);
            if (u == 0) continue;
            for (std::size_t c = 0; c < n; ++c) h(r, c) = fp::sub(h(r, c), fp::mul(u, h(j + 1, c)));
            for (std::size_t c = 0; c < n; ++c) h(c, j + 1) = fp::add(h(c, j + 1), fp::mul(u, h(c, r)));
        }
    }
    std::vector<Poly> p(n + 1);
    p[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        Poly t = mul(Poly{fp::neg(h(k - 1, k - 1)), 1}, p[k - 1]);
        Scalar prod = 1;
        for (std::size_t i = k - 1; i >= 1; --i) {
            prod = fp::mul(prod, h(i, i - 1));
            Scalar c = fp::mul(h(i - 1, k - 1), prod);
            if (c != 0) t = sub(t, mul(Poly{c}, p[i - 1]));
        }
        p[k] = t;
    }
    return p[n];
}

Matrix evaluate(const Poly& f, const Matrix& a) {
    const std::size_t n = a.rows();
    Matrix r(n, n);
    for (std::size_t k = f.size(); k-- > 0;) {
        r = r * a;
        for (std::size_t i = 0; i < n; ++i) r(i, i) = fp::add(r(i, i), f[k]);
    }
    return r;
}

Poly squarefree_part(const Poly& a) {
    if (degree(a) <= 0) return a;
    Poly g = gcd(a, derivative(a));
    Poly s = div(a, g);
    Scalar li = fp::inv(s.back());
    for (auto& c : s) c = fp::mul(c, li);
    return s;
}

namespace {

Poly random_poly(std::size_t deg_below, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, fp::prime() - 1);
    Poly a(deg_below);
    for (auto& c : a) c = dist(rng);
    trim(a);
    return a;
}

std::optional<Poly> equal_degree_split(const Poly& s, int d, std::mt19937_64& rng) {
    const int n = degree(s);
    const std::uint32_t p = fp::prime();
    for (int attempt = 0; attempt < 64; ++attempt) {
        Poly a = random_poly(std::size_t(n), rng);
        if (degree(a) <= 0) continue;
        Poly cand;
        if (p == 2) {
            Poly t = a, acc = a;
            for (int k = 1; k < d; ++k) {
                t = mod(mul(t, t), s);
                acc = mod(sub(acc, t), s);  // characteristic 2: subtraction is addition
            }
            cand = acc;
        } else {
            Poly norm = a, t = a;
            for (int k = 1; k < d; ++k) {
                t = powmod(t, p, s);
                norm = mod(mul(norm, t), s);
            }
            cand = sub(powmod(norm, (p - 1) / 2, s), Poly{1});
        }
        Poly g = gcd(s, cand);
        if (degree(g) > 0 && degree(g) < n) return g;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Poly> proper_factor(const Poly& s, std::mt19937_64& rng) {
    const int n = degree(s);
    if (n <= 1) return std::nullopt;
    const Poly x{0, 1};
    Poly f = s;
    Poly h = x;
    for (int d = 1; 2 * d <= degree(f); ++d) {
        h = powmod(h, fp::prime(), f);
        Poly g = gcd(f, sub(h, x));
        if (degree(g) <= 0) continue;
        if (degree(g) < n) return g;
        return equal_degree_split(s, d, rng);
    }
    return std::nullopt;
}

}  // namespace reltilt::poly
