#pragma once

#include "quadra/bessel.hpp"
#include "quadra/polynomial.hpp"
#include "quadra/quad_field.hpp"
#include "quadra/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace quadra {

/// A candidate quadrature rule: pairwise distinct nodes and matching weights
/// in Q(sqrt(d)). Purely rational rules carry d = -1 with all b = 0.
struct QuadratureFormula {
    long d = -1;
    std::vector<QuadFieldElement> nodes;
    std::vector<QuadFieldElement> weights;

    std::size_t size() const { return nodes.size(); }
    /// Enforces the structural invariants (sizes, distinctness, field match).
    void validate() const;
};

/// Weights making the given distinct nodes exact through degree m-1:
/// x_i = L[l_i] with l_i the Lagrange basis polynomial.
std::vector<QuadFieldElement> weights_from_nodes(const std::vector<QuadFieldElement>& nodes);

/// Largest D <= cap with sum_i x_i z_i^j == moment(j) for all 0 <= j <= D,
/// or -1 if already j = 0 fails. Default cap is 2m, which the degree bound
/// guarantees is never reached by a true scan.
int verify_degree(const QuadratureFormula& f, std::optional<long> cap = std::nullopt);

/// Lower-triangular change of basis from (phi_{r+1}, ..., phi_0) to the
/// monomials: entry(i, j) is the coefficient of z^(r+1-i) in phi_{r+1-j}.
/// Unit diagonal, so det = 1.
class BasisMatrix {
public:
    static BasisMatrix build(unsigned r);
    unsigned r() const { return r_; }
    std::size_t size() const { return static_cast<std::size_t>(r_) + 2; }
    const Rational& entry(std::size_t i, std::size_t j) const { return a_[i][j]; }

private:
    unsigned r_ = 0;
    std::vector<std::vector<Rational>> a_;
};

/// theta = phi_{r+1} + b_1 phi_r + ... + b_{r+1} phi_0, with the largest
/// nonzero index (the order), k = order + 1, and the degree 2(r+1) - k
/// guaranteed for any formula on theta's roots.
template <typename F>
struct QuasiOrthoDecomposition {
    unsigned r = 0;
    std::vector<F> b;
    unsigned order = 0;
    unsigned k = 1;
    int guaranteed_degree = 0;
};

/// Forward-substitution solve of BasisMatrix * (1, b_1, ..., b_{r+1})^T =
/// descending coefficients of theta. theta must be monic of degree >= 1.
template <typename F>
QuasiOrthoDecomposition<F> decompose(const Polynomial<F>& theta) {
    if (theta.degree() < 1) throw std::invalid_argument("decompose: degree must be >= 1");
    if (!theta.is_monic()) throw std::invalid_argument("decompose: theta must be monic");
    const unsigned r = static_cast<unsigned>(theta.degree()) - 1;
    const BasisMatrix A = BasisMatrix::build(r);
    const std::vector<F> rhs = theta.descending_coefficients();

    std::vector<F> x(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        F acc = rhs[i];
        for (std::size_t j = 0; j < i; ++j) acc = acc - F(A.entry(i, j)) * x[j];
        x[i] = acc;  // unit diagonal
    }

    QuasiOrthoDecomposition<F> dec;
    dec.r = r;
    dec.b.assign(x.begin() + 1, x.end());
    dec.order = 0;
    for (std::size_t m = dec.b.size(); m >= 1; --m) {
        if (!value_is_zero(dec.b[m - 1])) {
            dec.order = static_cast<unsigned>(m);
            break;
        }
    }
    dec.k = dec.order + 1;
    dec.guaranteed_degree = 2 * static_cast<int>(r + 1) - static_cast<int>(dec.k);
    return dec;
}

/// Formula on the given distinct nodes with weights from weights_from_nodes;
/// exact through degree m-1 at least.
QuadratureFormula construct_degree_r(const std::vector<QuadFieldElement>& nodes);

/// Extends r distinct rationals by the unique z_{r+1} making b_{r+1} = 0,
/// yielding an (r+1)-node rational formula of degree >= r+1. Throws when the
/// linear equation for z_{r+1} degenerates or the solution collides with a
/// given node.
QuadratureFormula construct_degree_r_plus_1(const std::vector<Rational>& partial_nodes);

struct NonExistence {
    std::string reason;
    Rational witness;  // the rational whose square root would be needed
};

/// The two-node, degree-2 question over Q(sqrt(d)) on the unit circle.
/// Any such rule forces Re(z) = -5/6 and Im(z)^2 = 11/36, so it exists iff
/// 11/|d| is a rational square (d = -11), and is then unique.
std::variant<QuadratureFormula, NonExistence> two_node_degree2(long d);

}  // namespace quadra
