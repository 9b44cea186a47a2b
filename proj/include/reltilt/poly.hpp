#pragma once

#include <optional>
#include <random>
#include <vector>

#include "reltilt/matrix.hpp"

namespace reltilt::poly {

// Dense polynomial over F_p, lowest degree first, no trailing zeros.
using Poly = std::vector<Scalar>;

void trim(Poly& a);
int degree(const Poly& a);  // -1 for zero
Poly mul(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& m);
Poly div(const Poly& a, const Poly& m);
Poly gcd(Poly a, Poly b);  // monic
Poly derivative(const Poly& a);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

Poly charpoly(const Matrix& a);
Matrix evaluate(const Poly& f, const Matrix& a);

// Largest squarefree divisor (p must exceed deg a).
Poly squarefree_part(const Poly& a);
// A proper monic factor of a squarefree polynomial, or nothing when it is irreducible.
std::optional<Poly> proper_factor(const Poly& s, std::mt19937_64& rng);

}  // namespace reltilt::poly
