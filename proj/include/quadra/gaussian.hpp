#pragma once

#include "quadra/int_util.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace quadra {

/// Element of Z[sqrt(-1)].
struct GaussianInt {
    Int re{0};
    Int im{0};

    GaussianInt() = default;
    GaussianInt(long r) : re(r) {}
    GaussianInt(Int r) : re(std::move(r)) {}
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_unit() const { return norm() == 1; }

    Int norm() const { return re * re + im * im; }
    GaussianInt conj() const { return {re, -im}; }
    GaussianInt times_i() const { return {-im, re}; }

    GaussianInt operator-() const { return {-re, -im}; }
    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianInt operator*(const Int& a, const GaussianInt& b) { return {a * b.re, a * b.im}; }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }

    /// Nearest-quotient division: x = q*y + r with norm(r) <= norm(y)/2 < norm(y).
    static std::pair<GaussianInt, GaussianInt> divmod(const GaussianInt& x, const GaussianInt& y);

    /// The unit multiple with re > 0 and im >= 0 (zero stays zero).
    GaussianInt canonical_associate() const;

    std::string str() const;  // "0", "3", "-i", "2+i", "1-2i"
    static GaussianInt parse(std::string_view text);
};

inline bool value_is_zero(const GaussianInt& z) { return z.is_zero(); }

/// Euclidean gcd, normalized to the canonical associate. (0,0) is an error.
GaussianInt gcd(GaussianInt x, GaussianInt y);

std::ostream& operator<<(std::ostream& os, const GaussianInt& z);

}  // namespace quadra
