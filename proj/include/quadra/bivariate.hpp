#pragma once

#include "quadra/polynomial.hpp"
#include "quadra/quad_field.hpp"
#include "quadra/rational.hpp"

namespace quadra {

/// Polynomial in x whose coefficients are polynomials in y.
using BivariatePolynomial = Polynomial<Polynomial<Rational>>;

/// Exact quotient num / (x - y) by synthetic division in x, treating y as a
/// symbolic coefficient. The remainder num(y, y) must vanish identically;
/// a nonzero remainder means num was not divisible and is reported as an error.
BivariatePolynomial divide_out_x_minus_y(const BivariatePolynomial& num);

/// Coefficient of x^i y^j.
Rational bivariate_coefficient(const BivariatePolynomial& f, std::size_t i, std::size_t j);

/// Swaps the roles of x and y.
BivariatePolynomial bivariate_transpose(const BivariatePolynomial& f);

Rational eval_bivariate(const BivariatePolynomial& f, const Rational& x, const Rational& y);
QuadFieldElement eval_bivariate(const BivariatePolynomial& f, const QuadFieldElement& x,
                                const QuadFieldElement& y);

/// The bivariate x - y.
BivariatePolynomial x_minus_y();

}  // namespace quadra
