#ifndef ECTO_WEIERSTRASS_HPP
#define ECTO_WEIERSTRASS_HPP

// Elliptic curves in long Weierstrass form over GF(q):
//
//     y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
//
// The chord-tangent group law is implemented for the long form, so the same
// code is valid in characteristics 2 and 3; the reduced coefficient shapes
// (short form for p >= 5, a1 = a3 = 0 for p = 3, full form for p = 2) are
// used only when enumerating every isomorphism class over a small field.
//
// Point counting scans x and counts the roots of the completed square in
// odd characteristic, and scans (x, y) pairs in characteristic 2.  Group
// structure is E(F_q) = Z/d1 x Z/d2 with d1 | d2 and d1 | q-1, computed from
// the lcm of point orders.

#include <array>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "ecto/gf.hpp"
#include "ecto/intmath.hpp"

namespace ecto {

/// Largest field order over which exhaustive curve enumeration is allowed.
inline constexpr std::uint64_t kEnumerationCap = 32;

class WeierstrassCurve {
  public:
    WeierstrassCurve(Field field, FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4,
                     FieldElement a6)
        : field_(std::move(field)), a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)),
          a4_(std::move(a4)), a6_(std::move(a6)) {
        for (const FieldElement* c : {&a1_, &a2_, &a3_, &a4_, &a6_}) {
            if (!field_.contains(*c)) throw std::invalid_argument("curve coefficient from a different field");
        }
    }

    const Field& field() const { return field_; }
    const FieldElement& a1() const { return a1_; }
    const FieldElement& a2() const { return a2_; }
    const FieldElement& a3() const { return a3_; }
    const FieldElement& a4() const { return a4_; }
    const FieldElement& a6() const { return a6_; }

    FieldElement discriminant() const {
        const Field& k = field_;
        const FieldElement b2 = k.add(k.mul(a1_, a1_), k.mul(k.from_int(4), a2_));
        const FieldElement b4 = k.add(k.mul(k.from_int(2), a4_), k.mul(a1_, a3_));
        const FieldElement b6 = k.add(k.mul(a3_, a3_), k.mul(k.from_int(4), a6_));
        const FieldElement b8 = k.sub(
            k.add(k.sub(k.add(k.mul(k.mul(a1_, a1_), a6_), k.mul(k.mul(k.from_int(4), a2_), a6_)),
                        k.mul(k.mul(a1_, a3_), a4_)),
                  k.mul(a2_, k.mul(a3_, a3_))),
            k.mul(a4_, a4_));
        FieldElement d = k.neg(k.mul(k.mul(b2, b2), b8));
        d = k.sub(d, k.mul(k.from_int(8), k.mul(k.mul(b4, b4), b4)));
        d = k.sub(d, k.mul(k.from_int(27), k.mul(b6, b6)));
        d = k.add(d, k.mul(k.from_int(9), k.mul(b2, k.mul(b4, b6))));
        return d;
    }

    bool is_singular() const { return discriminant().is_zero(); }

    friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) {
        return a.field_ == b.field_ && a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_ && a.a4_ == b.a4_ &&
               a.a6_ == b.a6_;
    }

  private:
    Field field_;
    FieldElement a1_, a2_, a3_, a4_, a6_;
};

inline std::ostream& operator<<(std::ostream& os, const WeierstrassCurve& E) {
    return os << "[" << E.a1() << "," << E.a2() << "," << E.a3() << "," << E.a4() << "," << E.a6() << "]";
}

/// A point of E(F_q): the point at infinity or an affine pair (x, y).
class CurvePoint {
  public:
    static CurvePoint infinity() { return CurvePoint(); }

    CurvePoint(FieldElement x, FieldElement y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

    bool is_infinity() const { return inf_; }

    const FieldElement& x() const {
        if (inf_) throw std::domain_error("point at infinity has no affine coordinates");
        return x_;
    }
    const FieldElement& y() const {
        if (inf_) throw std::domain_error("point at infinity has no affine coordinates");
        return y_;
    }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }

  private:
    CurvePoint() : inf_(true) {}
    bool inf_;
    FieldElement x_, y_;
};

inline std::ostream& operator<<(std::ostream& os, const CurvePoint& P) {
    if (P.is_infinity()) return os << "inf";
    return os << "(" << P.x() << "," << P.y() << ")";
}

inline bool on_curve(const WeierstrassCurve& E, const CurvePoint& P) {
    if (P.is_infinity()) return true;
    const Field& k = E.field();
    const FieldElement& x = P.x();
    const FieldElement& y = P.y();
    const FieldElement lhs = k.add(k.mul(y, y), k.add(k.mul(E.a1(), k.mul(x, y)), k.mul(E.a3(), y)));
    const FieldElement x2 = k.mul(x, x);
    const FieldElement rhs =
        k.add(k.add(k.mul(x2, x), k.mul(E.a2(), x2)), k.add(k.mul(E.a4(), x), E.a6()));
    return lhs == rhs;
}

namespace detail {

inline void require_nonsingular(const WeierstrassCurve& E) {
    if (E.is_singular()) throw std::domain_error("singular curve");
}

inline void require_on_curve(const WeierstrassCurve& E, const CurvePoint& P) {
    if (!on_curve(E, P)) throw std::invalid_argument("input point not on curve");
}

// Chord-tangent addition; both points must already lie on the nonsingular curve E.
inline CurvePoint add_unchecked(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q) {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    const Field& k = E.field();
    const FieldElement& x1 = P.x();
    const FieldElement& y1 = P.y();
    const FieldElement& x2 = Q.x();
    const FieldElement& y2 = Q.y();

    if (x1 == x2) {
        // Q == -P  <=>  y2 == -y1 - a1 x1 - a3 (covers 2-torsion doubling as well)
        const FieldElement y1neg = k.sub(k.sub(k.neg(y1), k.mul(E.a1(), x1)), E.a3());
        if (y2 == y1neg) return CurvePoint::infinity();
    }

    FieldElement lambda;
    if (x1 == x2) {
        // tangent slope; the denominator is nonzero because P is not 2-torsion here
        const FieldElement num =
            k.sub(k.add(k.add(k.mul(k.from_int(3), k.mul(x1, x1)), k.mul(k.from_int(2), k.mul(E.a2(), x1))),
                        E.a4()),
                  k.mul(E.a1(), y1));
        const FieldElement den = k.add(k.add(k.mul(k.from_int(2), y1), k.mul(E.a1(), x1)), E.a3());
        lambda = k.mul(num, k.inv(den));
    } else {
        lambda = k.mul(k.sub(y2, y1), k.inv(k.sub(x2, x1)));
    }

    const FieldElement nu = k.sub(y1, k.mul(lambda, x1));
    const FieldElement x3 =
        k.sub(k.sub(k.sub(k.add(k.mul(lambda, lambda), k.mul(E.a1(), lambda)), E.a2()), x1), x2);
    const FieldElement y3 = k.sub(k.sub(k.neg(k.mul(k.add(lambda, E.a1()), x3)), nu), E.a3());
    return CurvePoint(x3, y3);
}

inline CurvePoint scalar_mul_unchecked(const WeierstrassCurve& E, std::uint64_t k, CurvePoint P) {
    CurvePoint acc = CurvePoint::infinity();
    while (k) {
        if (k & 1) acc = add_unchecked(E, acc, P);
        k >>= 1;
        if (k) P = add_unchecked(E, P, P);
    }
    return acc;
}

}  // namespace detail

inline CurvePoint negate(const WeierstrassCurve& E, const CurvePoint& P) {
    detail::require_on_curve(E, P);
    if (P.is_infinity()) return P;
    const Field& k = E.field();
    return {P.x(), k.sub(k.sub(k.neg(P.y()), k.mul(E.a1(), P.x())), E.a3())};
}

inline CurvePoint add_points(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q) {
    detail::require_nonsingular(E);
    detail::require_on_curve(E, P);
    detail::require_on_curve(E, Q);
    return detail::add_unchecked(E, P, Q);
}

/// k*P for any integer k (k = 0 gives infinity, k < 0 multiplies the negation).
inline CurvePoint scalar_mul(const WeierstrassCurve& E, std::int64_t k, const CurvePoint& P) {
    detail::require_nonsingular(E);
    detail::require_on_curve(E, P);
    if (k == 0) return CurvePoint::infinity();
    CurvePoint base = P;
    std::uint64_t mag;
    if (k < 0) {
        base = negate(E, P);
        mag = static_cast<std::uint64_t>(-(k + 1)) + 1;
    } else {
        mag = static_cast<std::uint64_t>(k);
    }
    return detail::scalar_mul_unchecked(E, mag, base);
}

/// Precomputed operation tables for one small field (q <= 64).  All entries
/// are element ranks in enumeration order; building one table up front keeps
/// exhaustive curve scans out of the generic coefficient arithmetic.
class FieldTables {
  public:
    static constexpr std::uint64_t kMaxOrder = 64;

    explicit FieldTables(const Field& field) : field_(field) {
        const std::uint64_t q = field.size();
        if (q > kMaxOrder) throw std::invalid_argument("FieldTables requires q <= 64");
        q_ = static_cast<std::uint16_t>(q);
        elems_.reserve(q);
        for (std::uint64_t i = 0; i < q; ++i) elems_.push_back(field.element(i));
        add_.resize(q * q);
        mul_.resize(q * q);
        for (std::uint64_t i = 0; i < q; ++i) {
            for (std::uint64_t j = 0; j < q; ++j) {
                add_[i * q + j] = static_cast<std::uint16_t>(field.add(elems_[i], elems_[j]).packed());
                mul_[i * q + j] = static_cast<std::uint16_t>(field.mul(elems_[i], elems_[j]).packed());
            }
        }
        neg_.resize(q);
        sq_.resize(q);
        cube_.resize(q);
        sqrt_.assign(q, -1);
        for (std::uint64_t i = 0; i < q; ++i) {
            neg_[i] = static_cast<std::uint16_t>(field.neg(elems_[i]).packed());
            sq_[i] = mul_[i * q + i];
            cube_[i] = mul_[std::uint64_t{sq_[i]} * q + i];
            if (sqrt_[sq_[i]] < 0) sqrt_[sq_[i]] = static_cast<std::int32_t>(i);
        }
        if (field.characteristic() != 2) {
            inv2_ = static_cast<std::uint16_t>(field.inv(field.from_int(2)).packed());
            inv4_ = static_cast<std::uint16_t>(field.inv(field.from_int(4)).packed());
        }
    }

    const Field& field() const { return field_; }
    std::uint16_t order() const { return q_; }

    std::uint16_t add(std::uint16_t i, std::uint16_t j) const { return add_[std::uint64_t{i} * q_ + j]; }
    std::uint16_t mul(std::uint16_t i, std::uint16_t j) const { return mul_[std::uint64_t{i} * q_ + j]; }
    std::uint16_t neg(std::uint16_t i) const { return neg_[i]; }
    std::uint16_t sub(std::uint16_t i, std::uint16_t j) const { return add(i, neg_[j]); }
    std::uint16_t square(std::uint16_t i) const { return sq_[i]; }
    std::uint16_t cube(std::uint16_t i) const { return cube_[i]; }
    /// Rank of the smallest square root of element i, or -1 if i is not a square.
    std::int32_t sqrt_index(std::uint16_t i) const { return sqrt_[i]; }
    std::uint16_t half(std::uint16_t i) const { return mul(i, inv2_); }
    std::uint16_t quarter(std::uint16_t i) const { return mul(i, inv4_); }

    const FieldElement& element(std::uint16_t i) const { return elems_[i]; }
    std::uint16_t index_of(const FieldElement& e) const { return static_cast<std::uint16_t>(e.packed()); }

  private:
    Field field_;
    std::uint16_t q_ = 0;
    std::vector<FieldElement> elems_;
    std::vector<std::uint16_t> add_, mul_, neg_, sq_, cube_;
    std::vector<std::int32_t> sqrt_;
    std::uint16_t inv2_ = 0, inv4_ = 0;
};

namespace detail {

struct CurveIndices {
    std::uint16_t a1, a2, a3, a4, a6;
};

inline CurveIndices curve_indices(const FieldTables& t, const WeierstrassCurve& E) {
    return {t.index_of(E.a1()), t.index_of(E.a2()), t.index_of(E.a3()), t.index_of(E.a4()),
            t.index_of(E.a6())};
}

// x^3 + a2 x^2 + a4 x + a6 at the element of rank x.
inline std::uint16_t rhs_at(const FieldTables& t, const CurveIndices& c, std::uint16_t x) {
    std::uint16_t v = t.cube(x);
    v = t.add(v, t.mul(c.a2, t.square(x)));
    v = t.add(v, t.mul(c.a4, x));
    return t.add(v, c.a6);
}

inline std::uint64_t count_points_indexed(const FieldTables& t, const CurveIndices& c) {
    const std::uint16_t q = t.order();
    std::uint64_t total = 1;  // point at infinity
    if (t.field().characteristic() == 2) {
        for (std::uint16_t x = 0; x < q; ++x) {
            const std::uint16_t u = t.add(t.mul(c.a1, x), c.a3);
            const std::uint16_t v = rhs_at(t, c, x);
            if (u == 0) {
                ++total;  // y -> y^2 is a bijection
            } else {
                for (std::uint16_t y = 0; y < q; ++y) {
                    if (t.add(t.square(y), t.mul(u, y)) == v) ++total;
                }
            }
        }
    } else {
        for (std::uint16_t x = 0; x < q; ++x) {
            const std::uint16_t u = t.add(t.mul(c.a1, x), c.a3);
            // (y + u/2)^2 = rhs + u^2/4
            const std::uint16_t w = t.add(rhs_at(t, c, x), t.quarter(t.square(u)));
            if (w == 0) {
                ++total;
            } else if (t.sqrt_index(w) >= 0) {
                total += 2;
            }
        }
    }
    return total;
}

inline std::vector<CurvePoint> curve_points_indexed(const FieldTables& t, const CurveIndices& c) {
    const std::uint16_t q = t.order();
    std::vector<CurvePoint> pts;
    pts.push_back(CurvePoint::infinity());
    if (t.field().characteristic() == 2) {
        for (std::uint16_t x = 0; x < q; ++x) {
            const std::uint16_t u = t.add(t.mul(c.a1, x), c.a3);
            const std::uint16_t v = rhs_at(t, c, x);
            for (std::uint16_t y = 0; y < q; ++y) {
                if (t.add(t.square(y), t.mul(u, y)) == v) pts.emplace_back(t.element(x), t.element(y));
            }
        }
    } else {
        for (std::uint16_t x = 0; x < q; ++x) {
            const std::uint16_t u = t.add(t.mul(c.a1, x), c.a3);
            const std::uint16_t w = t.add(rhs_at(t, c, x), t.quarter(t.square(u)));
            const std::uint16_t mid = t.neg(t.half(u));  // y with 2y + u = 0
            if (w == 0) {
                pts.emplace_back(t.element(x), t.element(mid));
            } else {
                const std::int32_t s = t.sqrt_index(w);
                if (s >= 0) {
                    pts.emplace_back(t.element(x), t.element(t.add(mid, static_cast<std::uint16_t>(s))));
                    pts.emplace_back(t.element(x), t.element(t.sub(mid, static_cast<std::uint16_t>(s))));
                }
            }
        }
    }
    return pts;
}

}  // namespace detail

/// |E(F_q)| including the point at infinity.
inline std::uint64_t count_points(const WeierstrassCurve& E, const FieldTables& tables) {
    detail::require_nonsingular(E);
    return detail::count_points_indexed(tables, detail::curve_indices(tables, E));
}

inline std::uint64_t count_points(const WeierstrassCurve& E) {
    detail::require_nonsingular(E);
    const Field& k = E.field();
    const std::uint64_t q = k.size();
    if (q <= FieldTables::kMaxOrder) return count_points(E, FieldTables(k));
    std::uint64_t total = 1;
    if (k.characteristic() == 2) {
        // full (x, y) scan
        for (const FieldElement& x : k.elements()) {
            const FieldElement u = k.add(k.mul(E.a1(), x), E.a3());
            const FieldElement x2 = k.mul(x, x);
            const FieldElement v =
                k.add(k.add(k.mul(x2, x), k.mul(E.a2(), x2)), k.add(k.mul(E.a4(), x), E.a6()));
            if (u.is_zero()) {
                ++total;
            } else {
                for (const FieldElement& y : k.elements()) {
                    if (k.add(k.mul(y, y), k.mul(u, y)) == v) ++total;
                }
            }
        }
    } else {
        std::vector<std::uint8_t> is_sq(q, 0);
        for (const FieldElement& y : k.elements()) is_sq[k.mul(y, y).packed()] = 1;
        const FieldElement inv4 = k.inv(k.from_int(4));
        for (const FieldElement& x : k.elements()) {
            const FieldElement u = k.add(k.mul(E.a1(), x), E.a3());
            const FieldElement x2 = k.mul(x, x);
            const FieldElement v =
                k.add(k.add(k.mul(x2, x), k.mul(E.a2(), x2)), k.add(k.mul(E.a4(), x), E.a6()));
            const FieldElement w = k.add(v, k.mul(k.mul(u, u), inv4));
            if (w.is_zero()) {
                ++total;
            } else if (is_sq[w.packed()]) {
                total += 2;
            }
        }
    }
    return total;
}

/// Every point of E(F_q), the point at infinity first, then grouped by ascending x rank.
inline std::vector<CurvePoint> curve_points(const WeierstrassCurve& E, const FieldTables& tables) {
    detail::require_nonsingular(E);
    return detail::curve_points_indexed(tables, detail::curve_indices(tables, E));
}

inline std::vector<CurvePoint> curve_points(const WeierstrassCurve& E) {
    detail::require_nonsingular(E);
    const Field& k = E.field();
    if (k.size() <= FieldTables::kMaxOrder) return curve_points(E, FieldTables(k));
    std::vector<CurvePoint> pts;
    pts.push_back(CurvePoint::infinity());
    for (const FieldElement& x : k.elements()) {
        for (const FieldElement& y : k.elements()) {
            CurvePoint P(x, y);
            if (on_curve(E, P)) pts.push_back(std::move(P));
        }
    }
    return pts;
}

/// E(F_q) = Z/d1 x Z/d2 with d1 | d2; order = d1*d2 and trace = q + 1 - order.
struct GroupShape {
    std::uint64_t d1 = 1;
    std::uint64_t d2 = 1;
    std::uint64_t order = 1;
    std::int64_t trace = 0;

    friend bool operator==(const GroupShape&, const GroupShape&) = default;
};

namespace detail {

inline std::uint64_t point_order(const WeierstrassCurve& E, const CurvePoint& P, std::uint64_t group_order,
                                 const std::vector<std::pair<std::uint64_t, std::uint32_t>>& primes) {
    std::uint64_t ord = group_order;
    for (const auto& [ell, e] : primes) {
        (void)e;
        while (ord % ell == 0 &&
               scalar_mul_unchecked(E, ord / ell, P).is_infinity()) {
            ord /= ell;
        }
    }
    return ord;
}

inline GroupShape group_shape_from(const WeierstrassCurve& E, std::uint64_t order,
                                   const FieldTables* tables) {
    const std::uint64_t q = E.field().size();
    GroupShape shape;
    shape.order = order;
    shape.trace = static_cast<std::int64_t>(q + 1) - static_cast<std::int64_t>(order);

    // d1 divides both d2 and q - 1, hence d1^2 | order and d1 | q - 1; when 1
    // is the only candidate the group is cyclic and no point orders are needed.
    bool maybe_noncyclic = false;
    for (std::uint64_t e : divisors(std::gcd(order, q - 1))) {
        if (e > 1 && order % (e * e) == 0) {
            maybe_noncyclic = true;
            break;
        }
    }
    if (!maybe_noncyclic) {
        shape.d1 = 1;
        shape.d2 = order;
        return shape;
    }

    const std::vector<CurvePoint> pts = tables ? curve_points(E, *tables) : curve_points(E);
    const auto primes = factorize(order);
    std::uint64_t exponent = 1;
    for (const CurvePoint& P : pts) {
        if (P.is_infinity()) continue;
        exponent = std::lcm(exponent, point_order(E, P, order, primes));
        if (exponent == order) break;
    }
    shape.d2 = exponent;
    shape.d1 = order / exponent;
    if (shape.d1 * shape.d2 != order || shape.d2 % shape.d1 != 0 || (q - 1) % shape.d1 != 0) {
        throw std::logic_error("group shape invariants violated");
    }
    return shape;
}

}  // namespace detail

inline GroupShape group_shape(const WeierstrassCurve& E, const FieldTables& tables) {
    detail::require_nonsingular(E);
    return detail::group_shape_from(E, count_points(E, tables), &tables);
}

inline GroupShape group_shape(const WeierstrassCurve& E) {
    detail::require_nonsingular(E);
    return detail::group_shape_from(E, count_points(E), nullptr);
}

/// True iff E(F_q) has a point of exact order N, i.e. N divides the group exponent.
inline bool exists_point_of_order(const WeierstrassCurve& E, std::uint64_t N, const FieldTables& tables) {
    if (N < 1) throw std::invalid_argument("point order must be positive");
    detail::require_nonsingular(E);
    const std::uint64_t order = count_points(E, tables);
    if (order % N != 0) return false;
    return detail::group_shape_from(E, order, &tables).d2 % N == 0;
}

inline bool exists_point_of_order(const WeierstrassCurve& E, std::uint64_t N) {
    if (N < 1) throw std::invalid_argument("point order must be positive");
    detail::require_nonsingular(E);
    const std::uint64_t order = count_points(E);
    if (order % N != 0) return false;
    return detail::group_shape_from(E, order, nullptr).d2 % N == 0;
}

/// Streams every nonsingular curve over F_q in reduced form, ascending in
/// coefficient rank.  For p >= 5 the short form (0,0,0,a4,a6) is emitted, for
/// p = 3 the form (0,a2,0,a4,a6), and for p = 2 all five coefficients; each
/// isomorphism class over F_q is represented.  Requires q <= kEnumerationCap.
/// A callback returning bool stops the stream when it returns false.
template <class Fn>
void enumerate_curves(const FieldTables& tables, Fn&& fn) {
    const Field& k = tables.field();
    const std::uint64_t q = k.size();
    if (q > kEnumerationCap) throw std::invalid_argument("curve enumeration cap exceeded");
    const auto visit = [&](const WeierstrassCurve& E) -> bool {
        if constexpr (std::is_void_v<std::invoke_result_t<Fn&, const WeierstrassCurve&>>) {
            fn(E);
            return true;
        } else {
            return static_cast<bool>(fn(E));
        }
    };
    const FieldElement zero = k.zero();
    const std::uint64_t p = k.characteristic();
    const std::uint32_t coords = p >= 5 ? 2 : (p == 3 ? 3 : 5);
    std::uint64_t total = q;
    for (std::uint32_t i = 1; i < coords; ++i) total *= q;
    std::array<std::uint16_t, 5> a{};
    for (std::uint64_t tuple = 0; tuple < total; ++tuple) {
        std::uint64_t v = tuple;
        for (std::uint32_t i = coords; i-- > 0;) {  // first coordinate is the most significant
            a[i] = static_cast<std::uint16_t>(v % q);
            v /= q;
        }
        WeierstrassCurve E =
            p >= 5 ? WeierstrassCurve(k, zero, zero, zero, tables.element(a[0]), tables.element(a[1]))
            : p == 3
                ? WeierstrassCurve(k, zero, tables.element(a[0]), zero, tables.element(a[1]),
                                   tables.element(a[2]))
                : WeierstrassCurve(k, tables.element(a[0]), tables.element(a[1]), tables.element(a[2]),
                                   tables.element(a[3]), tables.element(a[4]));
        if (E.discriminant().is_zero()) continue;
        if (!visit(E)) return;
    }
}

template <class Fn>
void enumerate_curves(const Field& field, Fn&& fn) {
    if (field.size() > kEnumerationCap) throw std::invalid_argument("curve enumeration cap exceeded");
    enumerate_curves(FieldTables(field), std::forward<Fn>(fn));
}

/// { q + 1 - |E(F_q)| : E nonsingular over F_q }, by exhaustive enumeration.
inline std::set<std::int64_t> realized_traces(const Field& field) {
    if (field.size() > kEnumerationCap) throw std::invalid_argument("curve enumeration cap exceeded");
    FieldTables tables(field);
    const std::int64_t q1 = static_cast<std::int64_t>(field.size()) + 1;
    std::set<std::int64_t> traces;
    enumerate_curves(tables, [&](const WeierstrassCurve& E) {
        traces.insert(q1 - static_cast<std::int64_t>(count_points(E, tables)));
    });
    return traces;
}

/// All enumerated curves over F_q whose group exponent is divisible by N.
inline std::vector<WeierstrassCurve> curves_with_point_of_order(const Field& field, std::uint64_t N) {
    if (N < 1) throw std::invalid_argument("point order must be positive");
    if (field.size() > kEnumerationCap) throw std::invalid_argument("curve enumeration cap exceeded");
    FieldTables tables(field);
    std::vector<WeierstrassCurve> found;
    enumerate_curves(tables, [&](const WeierstrassCurve& E) {
        const std::uint64_t order = count_points(E, tables);
        if (order % N != 0) return;
        if (detail::group_shape_from(E, order, &tables).d2 % N == 0) found.push_back(E);
    });
    return found;
}

}  // namespace ecto

#endif  // ECTO_WEIERSTRASS_HPP
