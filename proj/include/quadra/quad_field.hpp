#pragma once

#include "quadra/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace quadra {

/// a + b*sqrt(d) with rational a, b and fixed squarefree d < 0.
/// Values with b == 0 are plain rationals and combine with any d; combining
/// two genuinely irrational values from different fields is an error.
class QuadFieldElement {
public:
    QuadFieldElement() = default;
    QuadFieldElement(long a) : a_(a) {}
    QuadFieldElement(const Rational& a) : a_(a) {}
    QuadFieldElement(Rational a, Rational b, long d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadFieldElement conj() const { return with_same_field(a_, -b_); }
    /// Field norm a^2 - d*b^2; for d < 0 this is |z|^2 >= 0, zero iff z = 0.
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
    QuadFieldElement inverse() const;

    /// Exact |z| = 1 test: a^2 + |d| b^2 == 1.
    bool on_unit_circle() const { return norm() == Rational(1); }

    QuadFieldElement operator-() const { return with_same_field(-a_, -b_); }
    friend QuadFieldElement operator+(const QuadFieldElement& x, const QuadFieldElement& y) {
        return QuadFieldElement(x.a_ + y.a_, x.b_ + y.b_, joined_d(x, y));
    }
    friend QuadFieldElement operator-(const QuadFieldElement& x, const QuadFieldElement& y) {
        return QuadFieldElement(x.a_ - y.a_, x.b_ - y.b_, joined_d(x, y));
    }
    friend QuadFieldElement operator*(const QuadFieldElement& x, const QuadFieldElement& y) {
        long d = joined_d(x, y);
        return QuadFieldElement(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_,
                                x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadFieldElement operator/(const QuadFieldElement& x, const QuadFieldElement& y) {
        return x * y.inverse();
    }

    friend bool operator==(const QuadFieldElement& x, const QuadFieldElement& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        return x.b_.is_zero() || x.d_ == y.d_;
    }
    friend bool operator!=(const QuadFieldElement& x, const QuadFieldElement& y) {
        return !(x == y);
    }

    std::string str() const;  // "a", "a+b*sqrt(d)"

private:
    QuadFieldElement with_same_field(Rational a, Rational b) const {
        QuadFieldElement r;
        r.a_ = std::move(a);
        r.b_ = std::move(b);
        r.d_ = d_;
        return r;
    }
    static long joined_d(const QuadFieldElement& x, const QuadFieldElement& y);

    Rational a_{};
    Rational b_{};
    long d_{-1};
};

inline bool value_is_zero(const QuadFieldElement& z) { return z.is_zero(); }

/// Square root of a rational inside Q(sqrt(d)): (r, 0) when q = r^2 >= 0,
/// (0, r) when q = d*r^2 (q <= 0 since d < 0), empty otherwise.
std::optional<QuadFieldElement> sqrt_in_field(const Rational& q, long d);

std::ostream& operator<<(std::ostream& os, const QuadFieldElement& z);

}  // namespace quadra
