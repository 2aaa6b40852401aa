#include "quadra/valuation.hpp"

#include <ostream>

namespace quadra {

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

ValuationContext ValuationContext::rational_prime(long p) {
    if (!is_prime(p)) throw std::invalid_argument("ValuationContext: p must be prime");
    return ValuationContext(Kind::rational_prime, p);
}

ValuationContext ValuationContext::inert_prime(long p) {
    if (!is_prime(p) || p % 4 != 3)
        throw std::invalid_argument("ValuationContext: inert prime must be = 3 (mod 4)");
    return ValuationContext(Kind::inert_prime, p);
}

ValuationContext ValuationContext::gaussian_prime_two_plus_i() {
    return ValuationContext(Kind::gaussian_prime, 5);
}

std::string ValuationContext::description() const {
    return kind_ == Kind::gaussian_prime ? "2+i" : std::to_string(prime_);
}

namespace {

Valuation integer_valuation(const Int& x, long p) {
    if (sgn(x) == 0) return Valuation::infinity();
    Int n = x;
    return Valuation::of(remove_factor(n, Int(p)));
}

// Exact division count by 2+i: z is divisible iff z*(2-i) has both
// components divisible by 5, and then z/(2+i) = z*(2-i)/5.
Valuation two_plus_i_valuation(GaussianInt z) {
    if (z.is_zero()) return Valuation::infinity();
    long v = 0;
    for (;;) {
        GaussianInt t = z * GaussianInt(Int(2), Int(-1));
        if (t.re % 5 != 0 || t.im % 5 != 0) return Valuation::of(v);
        z = GaussianInt(t.re / 5, t.im / 5);
        ++v;
    }
}

}  // namespace

Valuation ValuationContext::operator()(const Int& x) const {
    switch (kind_) {
        case Kind::rational_prime:
        case Kind::inert_prime:
            return integer_valuation(x, prime_);
        case Kind::gaussian_prime:
            return two_plus_i_valuation(GaussianInt(x));
    }
    throw std::logic_error("ValuationContext: bad kind");
}

Valuation ValuationContext::operator()(const GaussianInt& z) const {
    switch (kind_) {
        case Kind::rational_prime:
            if (sgn(z.im) != 0)
                throw std::domain_error(
                    "ValuationContext: rational prime acts on rational integers only");
            return integer_valuation(z.re, prime_);
        case Kind::inert_prime: {
            if (z.is_zero()) return Valuation::infinity();
            Valuation vn = integer_valuation(z.norm(), prime_);
            if (vn.value() % 2 != 0)
                throw std::logic_error("ValuationContext: odd norm valuation at inert prime");
            return Valuation::of(vn.value() / 2);
        }
        case Kind::gaussian_prime:
            return two_plus_i_valuation(z);
    }
    throw std::logic_error("ValuationContext: bad kind");
}

}  // namespace quadra
