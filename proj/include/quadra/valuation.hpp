#pragma once

#include "quadra/gaussian.hpp"
#include "quadra/int_util.hpp"

#include <iosfwd>
#include <string>

namespace quadra {

/// Discrete valuation value: a finite integer or a dedicated infinity (v(0)).
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation of(long v) { return Valuation(false, v); }

    bool is_infinite() const { return infinite_; }
    long value() const {
        if (infinite_) throw std::logic_error("Valuation: value() of infinity");
        return value_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
        return a.value_ == b.value_;
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }

    friend Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return of(a.value_ + b.value_);
    }

    std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
    bool infinite_;
    long value_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// A discrete valuation usable on rational integers and on Z[sqrt(-1)]:
///  - rational prime p (integers only),
///  - inert prime p = 3 (mod 4), acting on Z[sqrt(-1)] via v_p(norm)/2,
///  - the Gaussian prime 2+i (division count; equals v_5 on integers).
class ValuationContext {
public:
    enum class Kind { rational_prime, inert_prime, gaussian_prime };

    static ValuationContext rational_prime(long p);
    static ValuationContext inert_prime(long p);
    static ValuationContext gaussian_prime_two_plus_i();

    Kind kind() const { return kind_; }
    /// Residue prime: p for the rational/inert kinds, 5 for the 2+i kind.
    long prime() const { return prime_; }
    std::string description() const;  // "3", "7", "2+i"

    Valuation operator()(const Int& x) const;
    Valuation operator()(const GaussianInt& z) const;

private:
    ValuationContext(Kind k, long p) : kind_(k), prime_(p) {}
    Kind kind_;
    long prime_;
};

}  // namespace quadra
