#pragma once

#include "quadra/gaussian.hpp"
#include "quadra/polynomial.hpp"
#include "quadra/rational.hpp"

namespace quadra {

/// j-th moment of the weight on the unit circle: (-2)^j / (j+1)!.
/// The weight is normalized so that moment(0) == 1; moments are never
/// obtained by numeric integration.
Rational moment(unsigned j);

/// y_n, integer coefficients; the coefficient of x^k is binom(n+k, 2k)(2k-1)!!.
Polynomial<Int> bessel_y(unsigned n);

/// Monic member phi_n = y_n / (2n-1)!!.
Polynomial<Rational> monic_phi(unsigned n);

/// L[f] = sum of coefficient(j) * moment(j): the exact integral of f
/// against the weight, by linearity over moments.
template <typename F>
F moment_functional(const Polynomial<F>& f) {
    F acc{};
    for (int j = 0; j <= f.degree(); ++j)
        acc = acc + f.coefficient(static_cast<std::size_t>(j)) * F(moment(static_cast<unsigned>(j)));
    return acc;
}

/// h_n = L[phi_n^2]; nonzero for every n this project touches.
Rational h_value(unsigned n);

/// t*y_{r+1} + s*y_r over Z[sqrt(-1)], for coprime (s, t) with t != 0.
/// Coefficients are produced both by the closed form (a_0 = t(2r+1)!!,
/// a_1 = (t(2r+1)+s)(2r-1)!!, a_k = (t binom(2r+2-k, 2r+2-2k)
/// + s binom(2r+1-k, 2r+2-2k))(2r+1-2k)!! for 2 <= k <= r+1, where a_k
/// multiplies x^(r+1-k)) and by direct expansion; the two must agree.
Polynomial<GaussianInt> quasi_bessel(unsigned r, const GaussianInt& s, const GaussianInt& t);

/// Same polynomial in the a_k convention (leading coefficient first).
std::vector<GaussianInt> quasi_bessel_descending(unsigned r, const GaussianInt& s,
                                                 const GaussianInt& t);

}  // namespace quadra
