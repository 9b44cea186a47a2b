#include "reltilt/field.hpp"

#include <cstdlib>

namespace reltilt::fp {

namespace {
std::uint32_t g_prime = 32003;
}

std::uint32_t prime() { return g_prime; }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void set_prime(std::uint32_t p) {
    if (!is_prime(p) || p >= (1u << 31))
        throw std::invalid_argument("field characteristic must be a prime below 2^31, got " + std::to_string(p));
    g_prime = p;
}

bool configure_from_env() {
    const char* s = std::getenv("RELTILT_PRIME");
    if (s == nullptr || *s == '\0') return false;
    char* end = nullptr;
    unsigned long v = std::strtoul(s, &end, 10);
    if (end == nullptr || *end != '\0') throw std::invalid_argument(std::string("RELTILT_PRIME is not an integer: ") + s);
    set_prime(static_cast<std::uint32_t>(v));
    return true;
}

Scalar pow(Scalar a, std::uint64_t e) {
    Scalar r = 1 % prime();
    Scalar b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Scalar inv(Scalar a) {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    return pow(a, prime() - 2);
}

Scalar from_int(std::int64_t v) {
    std::int64_t p = prime();
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return Scalar(r);
}

std::int64_t to_signed(Scalar a) {
    std::int64_t p = prime();
    return a > p / 2 ? std::int64_t(a) - p : std::int64_t(a);
}

}  // namespace reltilt::fp
