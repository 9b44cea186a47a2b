#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace reltilt {

using Scalar = std::uint32_t;

// Session-wide prime field F_p. Set once at startup, before any algebra is built.
namespace fp {

std::uint32_t prime();
void set_prime(std::uint32_t p);     // throws std::invalid_argument unless p is an odd-or-2 prime < 2^31
bool is_prime(std::uint64_t n);

// Reads RELTILT_PRIME if present. Returns true when the variable was set.
bool configure_from_env();

inline Scalar add(Scalar a, Scalar b) {
    std::uint64_t s = std::uint64_t(a) + b;
    return s >= prime() ? Scalar(s - prime()) : Scalar(s);
}
inline Scalar sub(Scalar a, Scalar b) { return a >= b ? a - b : Scalar(std::uint64_t(a) + prime() - b); }
inline Scalar neg(Scalar a) { return a == 0 ? 0 : prime() - a; }
inline Scalar mul(Scalar a, Scalar b) { return Scalar((std::uint64_t(a) * b) % prime()); }
Scalar pow(Scalar a, std::uint64_t e);
Scalar inv(Scalar a);  // throws on zero
Scalar from_int(std::int64_t v);
// Symmetric representative in (-p/2, p/2], for printing.
std::int64_t to_signed(Scalar a);

}  // namespace fp

// RAII override of the session prime, for tests.
class PrimeGuard {
public:
    explicit PrimeGuard(std::uint32_t p) : saved_(fp::prime()) { fp::set_prime(p); }
    ~PrimeGuard() { fp::set_prime(saved_); }
    PrimeGuard(const PrimeGuard&) = delete;
    PrimeGuard& operator=(const PrimeGuard&) = delete;

private:
    std::uint32_t saved_;
};

}  // namespace reltilt
