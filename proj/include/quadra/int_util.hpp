#pragma once

#include <gmpxx.h>

#include <stdexcept>

namespace quadra {

/// Arbitrary-precision integer. All desk-scale number theory in this
/// project (factorials, binomials, square detection) sits on top of it.
using Int = mpz_class;

inline bool value_is_zero(const Int& v) { return sgn(v) == 0; }

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// n!! with the empty-product convention (-1)!! = 0!! = 1.
inline Int double_factorial(long n) {
    if (n == -1 || n == 0) return Int(1);
    if (n < -1) throw std::invalid_argument("double_factorial: n < -1");
    Int r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline bool is_perfect_square(const Int& n, Int& root) {
    if (sgn(n) < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

/// Strips all factors p from n, returning the multiplicity. n must be nonzero.
inline long remove_factor(Int& n, const Int& p) {
    return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

bool is_prime(long n);
bool is_squarefree(long n);

}  // namespace quadra
