#include "quadra/quad_field.hpp"

#include <ostream>

namespace quadra {

QuadFieldElement::QuadFieldElement(Rational a, Rational b, long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d >= 0 || !is_squarefree(d))
        throw std::invalid_argument("QuadFieldElement: d must be squarefree and negative");
}

long QuadFieldElement::joined_d(const QuadFieldElement& x, const QuadFieldElement& y) {
    if (x.b_.is_zero()) return y.d_;
    if (y.b_.is_zero()) return x.d_;
    if (x.d_ != y.d_)
        throw std::domain_error("QuadFieldElement: mixing elements of different fields");
    return x.d_;
}

QuadFieldElement QuadFieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("QuadFieldElement: inverse of zero");
    const Rational n = norm();
    return with_same_field(a_ / n, -b_ / n);
}

std::string QuadFieldElement::str() const {
    if (b_.is_zero()) return a_.str();
    std::string s;
    if (!a_.is_zero()) s = a_.str();
    if (b_.is_negative())
        s += s.empty() ? "-" : " - ";
    else if (!s.empty())
        s += " + ";
    const Rational m = b_.abs();
    if (m != Rational(1)) s += m.str() + "*";
    s += "sqrt(" + std::to_string(d_) + ")";
    return s;
}

std::optional<QuadFieldElement> sqrt_in_field(const Rational& q, long d) {
    if (d >= 0 || !is_squarefree(d))
        throw std::invalid_argument("sqrt_in_field: d must be squarefree and negative");
    if (q.is_zero()) return QuadFieldElement(Rational(0), Rational(0), d);
    if (!q.is_negative()) {
        if (auto r = exact_sqrt(q)) return QuadFieldElement(*r, Rational(0), d);
        return std::nullopt;
    }
    // q < 0: look for b with q = d * b^2.
    if (auto b = exact_sqrt(q / Rational(d))) return QuadFieldElement(Rational(0), *b, d);
    return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const QuadFieldElement& z) { return os << z.str(); }

}  // namespace quadra
