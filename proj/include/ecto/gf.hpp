#ifndef ECTO_GF_HPP
#define ECTO_GF_HPP

// Exact arithmetic in small finite fields GF(p^n), represented in the
// polynomial basis 1, x, ..., x^{n-1} modulo a monic irreducible polynomial.
//
// Field construction is deterministic: the modulus is the first monic
// irreducible found when the coefficient tuples (c_{n-1}, ..., c_0) of
// x^n + c_{n-1} x^{n-1} + ... + c_0 are scanned in ascending order, so two
// builds of GF(p^n) agree coefficient for coefficient.  For n = 1 the
// modulus is x.
//
// Elements are dense coefficient tuples, not packed integers; the fields in
// play are tiny and the cost of everything downstream is dominated by curve
// enumeration, not field arithmetic.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecto/intmath.hpp"

namespace ecto {

/// Largest supported field order p^n.
inline constexpr std::uint64_t kFieldOrderCap = std::uint64_t{1} << 20;

/// p^n <= 2^20 with p >= 2 bounds the extension degree by 20.
inline constexpr std::uint32_t kMaxExtensionDegree = 20;

namespace detail {

struct FieldImpl {
    std::uint64_t p = 0;                  // prime characteristic
    std::uint32_t n = 0;                  // extension degree
    std::uint64_t q = 0;                  // p^n
    std::vector<std::uint32_t> modulus;   // c_0..c_{n-1} of x^n + c_{n-1}x^{n-1} + ... + c_0
};

// Evaluate x^n + sum c_i x^i at a, over F_p.
inline std::uint64_t eval_monic(const std::vector<std::uint32_t>& c, std::uint64_t a, std::uint64_t p) {
    std::uint64_t acc = 1;  // leading coefficient
    for (std::size_t i = c.size(); i-- > 0;) acc = (acc * a + c[i]) % p;
    return acc;
}

// Remainder-is-zero test for (x^n + f) / g with g monic of degree d, over F_p.
inline bool monic_divides(const std::vector<std::uint32_t>& f, const std::vector<std::uint32_t>& g,
                          std::uint32_t d, std::uint64_t p) {
    const std::uint32_t n = static_cast<std::uint32_t>(f.size());
    std::vector<std::uint64_t> r(n + 1);
    for (std::uint32_t i = 0; i < n; ++i) r[i] = f[i];
    r[n] = 1;
    // long division: cancel the leading term r[k] against g for k = n .. d
    for (std::uint32_t k = n + 1; k-- > d;) {
        const std::uint64_t c = r[k] % p;
        if (c == 0) continue;
        r[k] = 0;
        for (std::uint32_t j = 0; j < d; ++j) {
            r[k - d + j] = (r[k - d + j] + c * (p - g[j] % p)) % p;
        }
    }
    for (std::uint32_t j = 0; j < d; ++j) {
        if (r[j] % p != 0) return false;
    }
    return true;
}

// Irreducibility of x^n + sum c_i x^i over F_p: root test, then (for n >= 4)
// trial division by every monic polynomial of degree 2..n/2.
inline bool is_irreducible(const std::vector<std::uint32_t>& c, std::uint64_t p) {
    const std::uint32_t n = static_cast<std::uint32_t>(c.size());
    if (n == 1) return true;  // x + c_0 is always irreducible
    if (c[0] == 0) return false;
    for (std::uint64_t a = 0; a < p; ++a) {
        if (eval_monic(c, a, p) == 0) return false;
    }
    if (n <= 3) return true;  // no roots rules out degree-2 and degree-3 factors
    std::vector<std::uint32_t> g;
    for (std::uint32_t d = 2; d <= n / 2; ++d) {
        g.assign(d, 0);
        const std::uint64_t count = checked_pow(p, d);
        for (std::uint64_t m = 0; m < count; ++m) {
            std::uint64_t v = m;
            for (std::uint32_t j = 0; j < d; ++j) {
                g[j] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (monic_divides(c, g, d, p)) return false;
        }
    }
    return true;
}

}  // namespace detail

class Field;

/// One element of a Field: n coordinates in [0, p), constant term first.
/// Elements are plain values; they stay valid while any copy of the owning
/// Field is alive.
class FieldElement {
  public:
    FieldElement() = default;

    std::span<const std::uint32_t> coeffs() const {
        return {c_.data(), impl_ ? impl_->n : 0};
    }

    /// The element's rank in enumeration order: sum c_i p^i.
    std::uint64_t packed() const {
        if (!impl_) return 0;
        std::uint64_t v = 0;
        for (std::uint32_t i = impl_->n; i-- > 0;) v = v * impl_->p + c_[i];
        return v;
    }

    bool is_zero() const {
        if (!impl_) return true;
        for (std::uint32_t i = 0; i < impl_->n; ++i) {
            if (c_[i] != 0) return false;
        }
        return true;
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        if (a.impl_ == b.impl_) {
            if (!a.impl_) return true;
        } else {
            if (!a.impl_ || !b.impl_) return false;
            if (a.impl_->p != b.impl_->p || a.impl_->n != b.impl_->n || a.impl_->modulus != b.impl_->modulus)
                return false;
        }
        for (std::uint32_t i = 0; i < a.impl_->n; ++i) {
            if (a.c_[i] != b.c_[i]) return false;
        }
        return true;
    }

    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  private:
    friend class Field;
    const detail::FieldImpl* impl_ = nullptr;
    std::array<std::uint32_t, kMaxExtensionDegree> c_{};
};

inline std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
    const auto c = e.coeffs();
    if (c.empty()) return os << "-";
    if (c.size() == 1) return os << c[0];
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    return os << ")";
}

/// GF(p^n) with the deterministic modulus described above.  Copies share
/// the underlying description, so a Field is cheap to pass by value.
class Field {
  public:
    Field(std::uint64_t p, std::uint32_t n) {
        if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
        if (n < 1) throw std::invalid_argument("extension degree must be at least 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (q > kFieldOrderCap / p) throw std::invalid_argument("field order p^n exceeds the supported cap");
            q *= p;
        }
        auto impl = std::make_shared<detail::FieldImpl>();
        impl->p = p;
        impl->n = n;
        impl->q = q;
        impl->modulus = find_modulus(p, n, q);
        impl_ = std::move(impl);
    }

    std::uint64_t characteristic() const { return impl_->p; }
    std::uint32_t degree() const { return impl_->n; }
    std::uint64_t size() const { return impl_->q; }

    /// Coefficients c_0..c_{n-1} of the modulus x^n + c_{n-1}x^{n-1} + ... + c_0.
    const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }

    friend bool operator==(const Field& a, const Field& b) {
        return a.impl_ == b.impl_ ||
               (a.impl_->p == b.impl_->p && a.impl_->n == b.impl_->n && a.impl_->modulus == b.impl_->modulus);
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

    /// True if e was produced by this field (or an equal one).
    bool contains(const FieldElement& e) const noexcept {
        if (e.impl_ == impl_.get()) return true;
        if (!e.impl_) return false;
        return e.impl_->p == impl_->p && e.impl_->n == impl_->n && e.impl_->modulus == impl_->modulus;
    }

    FieldElement zero() const { return make(); }

    FieldElement one() const {
        FieldElement e = make();
        e.c_[0] = 1;
        return e;
    }

    /// The element of rank `index` in enumeration order (base-p digits of index).
    FieldElement element(std::uint64_t index) const {
        if (index >= impl_->q) throw std::invalid_argument("element index out of range");
        FieldElement e = make();
        for (std::uint32_t i = 0; i < impl_->n; ++i) {
            e.c_[i] = static_cast<std::uint32_t>(index % impl_->p);
            index /= impl_->p;
        }
        return e;
    }

    FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const {
        if (coeffs.size() != impl_->n) throw std::invalid_argument("coefficient tuple has wrong length");
        FieldElement e = make();
        for (std::uint32_t i = 0; i < impl_->n; ++i) {
            if (coeffs[i] >= impl_->p) throw std::invalid_argument("coefficient out of range [0, p)");
            e.c_[i] = coeffs[i];
        }
        return e;
    }

    /// Image of an integer under Z -> GF(p^n) (reduction mod p into the prime field).
    FieldElement from_int(std::int64_t v) const {
        const std::int64_t p = static_cast<std::int64_t>(impl_->p);
        std::int64_t r = v % p;
        if (r < 0) r += p;
        FieldElement e = make();
        e.c_[0] = static_cast<std::uint32_t>(r);
        return e;
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        check_operand(a);
        check_operand(b);
        FieldElement r = make();
        const std::uint64_t p = impl_->p;
        for (std::uint32_t i = 0; i < impl_->n; ++i) {
            std::uint64_t s = std::uint64_t{a.c_[i]} + b.c_[i];
            if (s >= p) s -= p;
            r.c_[i] = static_cast<std::uint32_t>(s);
        }
        return r;
    }

    FieldElement sub(const FieldElement& a, const FieldElement& b) const {
        check_operand(a);
        check_operand(b);
        FieldElement r = make();
        const std::uint64_t p = impl_->p;
        for (std::uint32_t i = 0; i < impl_->n; ++i) {
            std::uint64_t s = std::uint64_t{a.c_[i]} + p - b.c_[i];
            if (s >= p) s -= p;
            r.c_[i] = static_cast<std::uint32_t>(s);
        }
        return r;
    }

    FieldElement neg(const FieldElement& a) const {
        check_operand(a);
        FieldElement r = make();
        const std::uint64_t p = impl_->p;
        for (std::uint32_t i = 0; i < impl_->n; ++i) {
            r.c_[i] = a.c_[i] == 0 ? 0 : static_cast<std::uint32_t>(p - a.c_[i]);
        }
        return r;
    }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        check_operand(a);
        check_operand(b);
        const std::uint32_t n = impl_->n;
        const std::uint64_t p = impl_->p;
        // Schoolbook product; partial sums stay below 2^46 for p^n <= 2^20.
        std::array<std::uint64_t, 2 * kMaxExtensionDegree> acc{};
        for (std::uint32_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            const std::uint64_t ai = a.c_[i];
            for (std::uint32_t j = 0; j < n; ++j) acc[i + j] += ai * b.c_[j];
        }
        // Fold degrees >= n using x^n = -(c_{n-1}x^{n-1} + ... + c_0).
        for (std::uint32_t i = 2 * n - 1; i-- > n;) {
            const std::uint64_t c = acc[i] % p;
            if (c == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j) {
                const std::uint32_t m = impl_->modulus[j];
                if (m) acc[i - n + j] += c * (p - m);
            }
        }
        FieldElement r = make();
        for (std::uint32_t i = 0; i < n; ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i] % p);
        return r;
    }

    /// a^e by square-and-multiply; e may be zero or negative (negative requires a != 0).
    FieldElement pow(const FieldElement& a, std::int64_t e) const {
        check_operand(a);
        FieldElement base = a;
        std::uint64_t mag;
        if (e < 0) {
            base = inv(a);
            mag = static_cast<std::uint64_t>(-(e + 1)) + 1;
        } else {
            mag = static_cast<std::uint64_t>(e);
        }
        FieldElement r = one();
        while (mag) {
            if (mag & 1) r = mul(r, base);
            mag >>= 1;
            if (mag) base = mul(base, base);
        }
        return r;
    }

    FieldElement inv(const FieldElement& a) const {
        check_operand(a);
        if (a.is_zero()) throw std::domain_error("inversion of zero");
        return pow(a, static_cast<std::int64_t>(impl_->q - 2));
    }

    /// Euler criterion for odd q; in characteristic 2 every element is a square.
    bool is_square(const FieldElement& a) const {
        check_operand(a);
        if (impl_->p == 2) return true;
        if (a.is_zero()) return true;
        return pow(a, static_cast<std::int64_t>((impl_->q - 1) / 2)) == one();
    }

    /// Some y with y^2 = a, or nullopt.  For odd q the root returned is the
    /// first one in enumeration order (smallest coefficient tuple); in
    /// characteristic 2 the root is unique.
    std::optional<FieldElement> sqrt(const FieldElement& a) const {
        check_operand(a);
        if (impl_->p == 2) return pow(a, static_cast<std::int64_t>(impl_->q / 2));
        if (!is_square(a)) return std::nullopt;
        for (std::uint64_t i = 0; i < impl_->q; ++i) {
            FieldElement y = element(i);
            if (mul(y, y) == a) return y;
        }
        return std::nullopt;  // unreachable for a genuine square
    }

    class ElementIterator {
      public:
        using value_type = FieldElement;
        using difference_type = std::ptrdiff_t;

        ElementIterator() = default;
        ElementIterator(const Field* f, std::uint64_t i) : field_(f), index_(i) {}
        FieldElement operator*() const { return field_->element(index_); }
        ElementIterator& operator++() { ++index_; return *this; }
        ElementIterator operator++(int) { ElementIterator t = *this; ++index_; return t; }
        friend bool operator==(const ElementIterator& a, const ElementIterator& b) { return a.index_ == b.index_; }
        friend bool operator!=(const ElementIterator& a, const ElementIterator& b) { return !(a == b); }

      private:
        const Field* field_ = nullptr;
        std::uint64_t index_ = 0;
    };

    class ElementRange {
      public:
        explicit ElementRange(const Field* f) : field_(f) {}
        ElementIterator begin() const { return {field_, 0}; }
        ElementIterator end() const { return {field_, field_->size()}; }

      private:
        const Field* field_;
    };

    /// All q elements in enumeration order, zero first.  The Field must
    /// outlive the returned range.
    ElementRange elements() const { return ElementRange(this); }

  private:
    FieldElement make() const {
        FieldElement e;
        e.impl_ = impl_.get();
        return e;
    }

    void check_operand(const FieldElement& a) const {
        if (a.impl_ == impl_.get()) return;
        if (a.impl_ == nullptr) throw std::invalid_argument("operand has no field");
        if (a.impl_->p != impl_->p || a.impl_->n != impl_->n || a.impl_->modulus != impl_->modulus)
            throw std::invalid_argument("mixed-field operands");
    }

    static std::vector<std::uint32_t> find_modulus(std::uint64_t p, std::uint32_t n, std::uint64_t q) {
        if (n == 1) return {0};  // modulus x
        std::vector<std::uint32_t> c(n, 0);
        for (std::uint64_t m = 0; m < q; ++m) {
            std::uint64_t v = m;
            for (std::uint32_t i = 0; i < n; ++i) {
                c[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (detail::is_irreducible(c, p)) return c;
        }
        throw std::logic_error("no irreducible modulus found");  // cannot happen
    }

    std::shared_ptr<const detail::FieldImpl> impl_;
};

inline Field make_field(std::uint64_t p, std::uint32_t n) { return Field(p, n); }

}  // namespace ecto

#endif  // ECTO_GF_HPP
