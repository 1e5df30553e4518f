#ifndef ECTO_WATERHOUSE_HPP
#define ECTO_WATERHOUSE_HPP

// Exact Hasse interval arithmetic and Waterhouse's classification of the
// Frobenius traces t realized by elliptic curves over F_q, q = p^n.
//
// A trace t with t^2 <= 4q is admissible iff one of
//   (1) gcd(t, p) = 1
//   (2) n even and t^2 = 4q
//   (3) n even, p != 1 (mod 3), and t^2 = q
//   (4) n odd, p in {2, 3}, and t^2 = p^{n+1}
//   (5) t = 0, and n odd or p != 1 (mod 4)
// holds.  Every radical comparison (|t| <= 2 sqrt(q), t = +-sqrt(q), ...) is
// carried out as an exact integer square comparison; the boundary cases are
// precisely the ones the obstruction argument turns on, so no floating point
// is used anywhere.

#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ecto/gf.hpp"
#include "ecto/intmath.hpp"

namespace ecto {

/// A trace candidate t for F_{p^n} together with its Waterhouse verdict.
/// matched_condition is the first condition (1)-(5) that fired, or 0 when
/// the trace is inadmissible.
struct TraceQuery {
    std::int64_t t = 0;
    std::uint64_t p = 0;
    std::uint32_t n = 0;
    std::uint64_t q = 0;
    bool admissible = false;
    int matched_condition = 0;

    friend bool operator==(const TraceQuery&, const TraceQuery&) = default;
};

namespace detail {

inline std::uint64_t prime_power_order(std::uint64_t p, std::uint32_t n) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (n < 1) throw std::invalid_argument("extension degree must be at least 1");
    const std::uint64_t q = checked_pow(p, n);
    if (q > kFieldOrderCap) throw std::invalid_argument("prime power exceeds the supported cap");
    return q;
}

}  // namespace detail

/// True iff m can be a curve order over F_q, i.e. (q + 1 - m)^2 <= 4q.
inline bool hasse_contains(std::uint64_t p, std::uint32_t n, std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("group order must be positive");
    const std::uint64_t q = detail::prime_power_order(p, n);
    const std::uint64_t diff = m > q + 1 ? m - (q + 1) : (q + 1) - m;
    if (diff > 2 * (std::uint64_t{1} << 10)) return false;  // 2*sqrt(q) <= 2^11 under the cap
    return diff * diff <= 4 * q;
}

inline TraceQuery admissible_trace(std::int64_t t, std::uint64_t p, std::uint32_t n) {
    const std::uint64_t q = detail::prime_power_order(p, n);
    TraceQuery tq{t, p, n, q, false, 0};
    const std::uint64_t abs_t = t < 0 ? static_cast<std::uint64_t>(-(t + 1)) + 1 : static_cast<std::uint64_t>(t);
    if (abs_t > 2 * (std::uint64_t{1} << 10) || abs_t * abs_t > 4 * q) return tq;
    const std::uint64_t t2 = abs_t * abs_t;
    int cond = 0;
    if (std::gcd(abs_t, p) == 1) {
        cond = 1;
    } else if (n % 2 == 0 && t2 == 4 * q) {
        cond = 2;
    } else if (n % 2 == 0 && p % 3 != 1 && t2 == q) {
        cond = 3;
    } else if (n % 2 == 1 && (p == 2 || p == 3) && t2 == checked_pow(p, n + 1)) {
        cond = 4;
    } else if (t == 0 && (n % 2 == 1 || p % 4 != 1)) {
        cond = 5;
    }
    tq.admissible = cond != 0;
    tq.matched_condition = cond;
    return tq;
}

/// { q + 1 - t : t admissible over F_{p^n} }, the realizable curve orders.
inline std::set<std::uint64_t> admissible_orders(std::uint64_t p, std::uint32_t n) {
    const std::uint64_t q = detail::prime_power_order(p, n);
    const std::int64_t tmax = static_cast<std::int64_t>(isqrt(4 * q));
    std::set<std::uint64_t> orders;
    for (std::int64_t t = -tmax; t <= tmax; ++t) {
        if (admissible_trace(t, p, n).admissible) {
            orders.insert(static_cast<std::uint64_t>(static_cast<std::int64_t>(q) + 1 - t));
        }
    }
    return orders;
}

/// All positive multiples of N inside the Hasse interval of F_{p^n}.
inline std::set<std::uint64_t> multiples_in_hasse(std::uint64_t N, std::uint64_t p, std::uint32_t n) {
    if (N < 1) throw std::invalid_argument("level must be positive");
    const std::uint64_t q = detail::prime_power_order(p, n);
    const std::uint64_t upper = q + 1 + isqrt(4 * q);
    std::set<std::uint64_t> hits;
    for (std::uint64_t m = N; m <= upper; m += N) {
        if (hasse_contains(p, n, m)) hits.insert(m);
    }
    return hits;
}

}  // namespace ecto

#endif  // ECTO_WATERHOUSE_HPP
