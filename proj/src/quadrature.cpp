#include "quadra/quadrature.hpp"

namespace quadra {

void QuadratureFormula::validate() const {
    if (nodes.empty()) throw std::invalid_argument("QuadratureFormula: no nodes");
    if (nodes.size() != weights.size())
        throw std::invalid_argument("QuadratureFormula: nodes/weights size mismatch");
    if (d >= 0 || !is_squarefree(d))
        throw std::invalid_argument("QuadratureFormula: d must be squarefree and negative");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j])
                throw std::invalid_argument("QuadratureFormula: repeated nodes");
    auto check_field = [&](const QuadFieldElement& z) {
        if (!z.is_rational() && z.d() != d)
            throw std::invalid_argument("QuadratureFormula: element outside Q(sqrt(d))");
    };
    for (const auto& z : nodes) check_field(z);
    for (const auto& x : weights) check_field(x);
}

std::vector<QuadFieldElement> weights_from_nodes(const std::vector<QuadFieldElement>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("weights_from_nodes: no nodes");
    std::vector<QuadFieldElement> weights;
    weights.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        weights.push_back(moment_functional(lagrange_basis(nodes, i)));
    return weights;
}

int verify_degree(const QuadratureFormula& f, std::optional<long> cap) {
    const long limit = cap.value_or(2 * static_cast<long>(f.size()));
    if (limit < 0) return -1;
    std::vector<QuadFieldElement> powers(f.size(), QuadFieldElement(Rational(1)));
    for (long j = 0; j <= limit; ++j) {
        QuadFieldElement sum;
        for (std::size_t i = 0; i < f.size(); ++i) sum = sum + f.weights[i] * powers[i];
        if (sum != QuadFieldElement(moment(static_cast<unsigned>(j))))
            return static_cast<int>(j) - 1;
        for (std::size_t i = 0; i < f.size(); ++i) powers[i] = powers[i] * f.nodes[i];
    }
    return static_cast<int>(limit);
}

BasisMatrix BasisMatrix::build(unsigned r) {
    BasisMatrix m;
    m.r_ = r;
    const std::size_t n = static_cast<std::size_t>(r) + 2;
    m.a_.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        const unsigned deg = r + 1 - static_cast<unsigned>(j);
        const Polynomial<Rational> phi = monic_phi(deg);
        for (std::size_t i = j; i < n; ++i) {
            // coefficient of z^(r+1-i) in phi_(r+1-j)
            m.a_[i][j] = phi.coefficient(static_cast<std::size_t>(r + 1 - i));
        }
    }
    return m;
}

namespace {

long derive_d(const std::vector<QuadFieldElement>& elems) {
    long d = 0;
    for (const auto& z : elems) {
        if (z.is_rational()) continue;
        if (d == 0)
            d = z.d();
        else if (d != z.d())
            throw std::invalid_argument("nodes span different quadratic fields");
    }
    return d == 0 ? -1 : d;
}

}  // namespace

QuadratureFormula construct_degree_r(const std::vector<QuadFieldElement>& nodes) {
    QuadratureFormula f;
    f.d = derive_d(nodes);
    f.nodes = nodes;
    f.weights = weights_from_nodes(nodes);
    f.validate();
    return f;
}

QuadratureFormula construct_degree_r_plus_1(const std::vector<Rational>& partial_nodes) {
    const unsigned r = static_cast<unsigned>(partial_nodes.size());
    for (std::size_t i = 0; i < partial_nodes.size(); ++i)
        for (std::size_t j = i + 1; j < partial_nodes.size(); ++j)
            if (partial_nodes[i] == partial_nodes[j])
                throw std::invalid_argument("construct_degree_r_plus_1: repeated nodes");

    // Elementary symmetric polynomials of the known nodes.
    std::vector<Rational> e(r + 1, Rational(0));
    e[0] = Rational(1);
    for (const Rational& z : partial_nodes)
        for (std::size_t i = e.size() - 1; i >= 1; --i) e[i] = e[i] + z * e[i - 1];

    // Descending coefficient vector of theta as linear polynomials in the
    // unknown node u: coefficient of z^(r+1-i) is (-1)^i (e_i + u e_{i-1}).
    using LinPoly = Polynomial<Rational>;
    const LinPoly u = LinPoly::variable();
    std::vector<LinPoly> rhs;
    rhs.reserve(r + 2);
    for (unsigned i = 0; i <= r + 1; ++i) {
        LinPoly zi = LinPoly(i <= r ? e[i] : Rational(0));
        if (i >= 1 && i - 1 <= r) zi = zi + u * e[i - 1];
        if (i % 2 == 1) zi = -zi;
        rhs.push_back(zi);
    }

    const BasisMatrix A = BasisMatrix::build(r);
    std::vector<LinPoly> x(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        LinPoly acc = rhs[i];
        for (std::size_t j = 0; j < i; ++j) acc = acc - x[j] * A.entry(i, j);
        x[i] = acc;
    }

    // Last row: b_{r+1}(u) = alpha*u + beta must vanish.
    const LinPoly& last = x[A.size() - 1];
    const Rational alpha = last.coefficient(1);
    const Rational beta = last.coefficient(0);
    if (alpha.is_zero())
        throw std::domain_error(
            "construct_degree_r_plus_1: degenerate node choice (no solvable extension)");
    const Rational solved = -beta / alpha;
    for (const Rational& z : partial_nodes)
        if (z == solved)
            throw std::domain_error(
                "construct_degree_r_plus_1: solved node collides with a given node");

    std::vector<QuadFieldElement> nodes;
    nodes.reserve(r + 1);
    for (const Rational& z : partial_nodes) nodes.emplace_back(z);
    nodes.emplace_back(solved);
    return construct_degree_r(nodes);
}

std::variant<QuadratureFormula, NonExistence> two_node_degree2(long d) {
    if (d >= 0 || !is_squarefree(d))
        throw std::invalid_argument("two_node_degree2: d must be squarefree and negative");
    // Both nodes on the circle force Re(z) = -5/6 and Im(z)^2 = 11/36, i.e.
    // b^2 * |d| = 11/36. Solvable over Q(sqrt(d)) iff 11/|d| is a square.
    const Rational target = Rational(11) / Rational(-d);
    const auto root = exact_sqrt(target);
    if (!root) {
        NonExistence no;
        no.witness = target;
        no.reason = "sqrt(" + target.str() + ")/6 irrational";
        return no;
    }
    const Rational b = *root / Rational(6);
    const Rational re(Int(-5), Int(6));
    std::vector<QuadFieldElement> nodes{QuadFieldElement(re, b, d), QuadFieldElement(re, -b, d)};
    QuadratureFormula f;
    f.d = d;
    f.nodes = nodes;
    f.weights = weights_from_nodes(nodes);
    f.validate();
    return f;
}

}  // namespace quadra
