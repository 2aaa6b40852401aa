#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace quadra {

/// Dense univariate polynomial over an exact coefficient ring T.
/// Coefficients are stored by ascending degree with no trailing zeros;
/// the zero polynomial has an empty vector and degree() == -1 (the
/// "minus infinity" marker).
template <typename T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int constant) : Polynomial(T(constant)) {}
    explicit Polynomial(T constant) {
        if (!value_is_zero(constant)) c_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<T> ascending) : c_(std::move(ascending)) { normalize(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(T(1)); }
    static Polynomial variable() { return Polynomial(std::vector<T>{T(0), T(1)}); }

    /// Builds from leading-coefficient-first order (the a_k convention).
    static Polynomial from_descending(std::vector<T> descending) {
        std::reverse(descending.begin(), descending.end());
        return Polynomial(std::move(descending));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    T coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    const std::vector<T>& coefficients() const { return c_; }

    /// Coefficients with the leading one first, so that result[k] multiplies
    /// x^(degree - k). Inverse of from_descending.
    std::vector<T> descending_coefficients() const {
        std::vector<T> r(c_.rbegin(), c_.rend());
        return r;
    }

    T leading() const {
        if (is_zero()) throw std::logic_error("Polynomial: leading() of zero");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back() == T(1); }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
        std::vector<T> r(std::max(f.c_.size(), g.c_.size()), T(0));
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < f.c_.size()) r[i] = r[i] + f.c_[i];
            if (i < g.c_.size()) r[i] = r[i] + g.c_[i];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        if (f.is_zero() || g.is_zero()) return zero();
        std::vector<T> r(f.c_.size() + g.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < f.c_.size(); ++i)
            for (std::size_t j = 0; j < g.c_.size(); ++j) r[i + j] = r[i + j] + f.c_[i] * g.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& f, const T& s) {
        std::vector<T> r(f.c_);
        for (auto& x : r) x = x * s;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const T& s, const Polynomial& f) { return f * s; }

    friend bool operator==(const Polynomial& f, const Polynomial& g) { return f.c_ == g.c_; }
    friend bool operator!=(const Polynomial& f, const Polynomial& g) { return !(f == g); }

    T eval(const T& x) const {
        T acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Horner evaluation in a larger ring S (S must be constructible from T).
    template <typename S>
    S eval_in(const S& x) const {
        S acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
        return acc;
    }

    /// Coefficient-wise lift into S.
    template <typename S>
    Polynomial<S> lift() const {
        std::vector<S> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.emplace_back(x);
        return Polynomial<S>(std::move(r));
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<T> r;
        r.reserve(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * T(static_cast<int>(k)));
        return Polynomial(std::move(r));
    }

private:
    void normalize() {
        while (!c_.empty() && value_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

template <typename T>
bool value_is_zero(const Polynomial<T>& p) {
    return p.is_zero();
}

/// Monic polynomial with exactly the given multiset of roots; the coefficient
/// of x^(n-i) is (-1)^i e_i(roots).
template <typename T>
Polynomial<T> expand_from_roots(const std::vector<T>& roots) {
    Polynomial<T> f = Polynomial<T>::one();
    for (const T& r : roots)
        f = f * Polynomial<T>(std::vector<T>{-r, T(1)});
    return f;
}

/// Degree m-1 polynomial with l_i(nodes[j]) = delta_ij. Nodes must be
/// pairwise distinct; T must be a field.
template <typename T>
Polynomial<T> lagrange_basis(const std::vector<T>& nodes, std::size_t i) {
    if (i >= nodes.size()) throw std::out_of_range("lagrange_basis: index");
    Polynomial<T> num = Polynomial<T>::one();
    T den(1);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (j == i) continue;
        if (nodes[j] == nodes[i]) throw std::invalid_argument("lagrange_basis: repeated nodes");
        num = num * Polynomial<T>(std::vector<T>{-nodes[j], T(1)});
        den = den * (nodes[i] - nodes[j]);
    }
    T inv = T(1) / den;
    return num * inv;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p) {
    os << "[";
    for (int k = 0; k <= p.degree(); ++k) {
        if (k) os << ", ";
        os << p.coefficient(static_cast<std::size_t>(k));
    }
    return os << "]";
}

}  // namespace quadra
