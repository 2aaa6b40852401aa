#include "quadra/bivariate.hpp"

#include <stdexcept>

namespace quadra {

BivariatePolynomial divide_out_x_minus_y(const BivariatePolynomial& num) {
    if (num.is_zero()) return BivariatePolynomial::zero();
    const auto y = Polynomial<Rational>::variable();
    const int n = num.degree();
    if (n < 1) throw std::invalid_argument("divide_out_x_minus_y: numerator is constant in x");

    std::vector<Polynomial<Rational>> q(static_cast<std::size_t>(n));
    Polynomial<Rational> acc = num.coefficient(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 1; --k) {
        q[static_cast<std::size_t>(k)] = acc;
        acc = num.coefficient(static_cast<std::size_t>(k)) + y * acc;
    }
    q[0] = acc;
    const Polynomial<Rational> remainder = num.coefficient(0) + y * acc;
    if (!remainder.is_zero())
        throw std::invalid_argument("divide_out_x_minus_y: nonzero remainder on the diagonal");
    return BivariatePolynomial(std::move(q));
}

Rational bivariate_coefficient(const BivariatePolynomial& f, std::size_t i, std::size_t j) {
    return f.coefficient(i).coefficient(j);
}

BivariatePolynomial bivariate_transpose(const BivariatePolynomial& f) {
    int dy = -1;
    for (int i = 0; i <= f.degree(); ++i)
        dy = std::max(dy, f.coefficient(static_cast<std::size_t>(i)).degree());
    if (dy < 0) return BivariatePolynomial::zero();
    std::vector<Polynomial<Rational>> cols;
    cols.reserve(static_cast<std::size_t>(dy) + 1);
    for (int j = 0; j <= dy; ++j) {
        std::vector<Rational> col;
        col.reserve(static_cast<std::size_t>(f.degree()) + 1);
        for (int i = 0; i <= f.degree(); ++i)
            col.push_back(bivariate_coefficient(f, static_cast<std::size_t>(i),
                                                static_cast<std::size_t>(j)));
        cols.emplace_back(std::move(col));
    }
    return BivariatePolynomial(std::move(cols));
}

Rational eval_bivariate(const BivariatePolynomial& f, const Rational& x, const Rational& y) {
    Rational acc;
    for (int i = f.degree(); i >= 0; --i)
        acc = acc * x + f.coefficient(static_cast<std::size_t>(i)).eval(y);
    return acc;
}

QuadFieldElement eval_bivariate(const BivariatePolynomial& f, const QuadFieldElement& x,
                                const QuadFieldElement& y) {
    QuadFieldElement acc;
    for (int i = f.degree(); i >= 0; --i)
        acc = acc * x + f.coefficient(static_cast<std::size_t>(i)).eval_in(y);
    return acc;
}

BivariatePolynomial x_minus_y() {
    return BivariatePolynomial(std::vector<Polynomial<Rational>>{
        -Polynomial<Rational>::variable(), Polynomial<Rational>::one()});
}

}  // namespace quadra
