#ifndef ECTO_INTMATH_HPP
#define ECTO_INTMATH_HPP

// Exact integer helpers shared by the field, trace and modular-curve code.
// Everything here is pure integer arithmetic; no floating point is used
// anywhere in the library (the trace bounds depend on exact boundary cases).

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ecto {

inline bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    if (m % 3 == 0) return m == 3;
    for (std::uint64_t d = 5; d * d <= m; d += 6) {
        if (m % d == 0 || m % (d + 2) == 0) return false;
    }
    return true;
}

/// floor(sqrt(v)) by integer Newton iteration.
inline std::uint64_t isqrt(std::uint64_t v) {
    if (v < 2) return v;
    std::uint64_t x = v;
    std::uint64_t y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + v / x) / 2;
    }
    return x;
}

/// base^exp, throwing std::overflow_error instead of wrapping.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

/// Prime factorization by trial division, as (prime, exponent) pairs in ascending order.
inline std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t m) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t d : {std::uint64_t{2}, std::uint64_t{3}}) {
        if (m % d == 0) {
            std::uint32_t e = 0;
            while (m % d == 0) { m /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    for (std::uint64_t d = 5; d * d <= m; d += 6) {
        for (std::uint64_t q : {d, d + 2}) {
            if (m % q == 0) {
                std::uint32_t e = 0;
                while (m % q == 0) { m /= q; ++e; }
                out.emplace_back(q, e);
            }
        }
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

/// All positive divisors of m, sorted ascending.
inline std::vector<std::uint64_t> divisors(std::uint64_t m) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d != m / d) large.push_back(m / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

inline std::uint64_t euler_phi(std::uint64_t m) {
    std::uint64_t r = m;
    for (const auto& [p, e] : factorize(m)) {
        (void)e;
        r = r / p * (p - 1);
    }
    return r;
}

}  // namespace ecto

#endif  // ECTO_INTMATH_HPP
