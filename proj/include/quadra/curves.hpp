#pragma once

#include "quadra/bivariate.hpp"
#include "quadra/quad_field.hpp"
#include "quadra/quadrature.hpp"
#include "quadra/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quadra {

/// w^2 = c4 y^4 + c3 y^3 + c2 y^2 + c1 y + c0 with exact membership tests.
struct QuarticCurve {
    Rational c4, c3, c2, c1, c0;

    Rational rhs(const Rational& y) const;
    bool contains(const Rational& y, const QuadFieldElement& w) const;
};

/// w^2 = -75y^4 - 120y^3 - 84y^2 - 28y - 4, the completed square of
/// f_2(x, y) = 0 in x; its Q(sqrt(-1)) points index the three-node degree-4
/// formulas.
QuarticCurve curve_cdk_r2();

/// y^2 = -44x^4 - 84x^3 + x^2 + 84x + 43, whose rational points decide the
/// three-node degree-3 question on the circle.
QuarticCurve curve_mt2();

struct CurvePoint {
    Rational y;
    QuadFieldElement w;
};

/// f_l(x, y) = (Y_{l+1}(x) Y_l(y) - Y_l(x) Y_{l+1}(y)) / (x - y) over the
/// integer-coefficient family Y = bessel_y; symmetric in x and y.
BivariatePolynomial f_poly(unsigned l);

/// The degree-l reproducing kernel, equal to f_l / (2l+1).
BivariatePolynomial cd_kernel(unsigned l);

/// True iff f_r(z_i, z_j) == 0 exactly for all i != j. Necessary for the
/// nodes to support a degree-2r formula; a false result rules them out.
bool pairwise_compatible(const std::vector<QuadFieldElement>& nodes, unsigned r);

/// From a point (y, w) on curve_cdk_r2 with rational y and w in Q(sqrt(-1)):
/// z_1 = y and z_2, z_3 the two roots of f_2(x, y) = 0, i.e.
/// (±w - (15y^2+14y+4)) / (2(15y^2+15y+5)); weights from weights_from_nodes.
QuadratureFormula nodes_from_point(const CurvePoint& p);

enum class SquareMode { rational_only, gaussian };

/// All points with y = p/q in lowest terms, |p| <= height, 1 <= q <= height,
/// and rhs(y) a square in the requested sense. Ordered by (q, p) ascending,
/// the +w branch before -w.
std::vector<CurvePoint> search_points(const QuarticCurve& curve, long height, SquareMode mode);

/// One candidate row of the three-node degree-3 elimination: given s, checks
/// which of t = sqrt(1-s^2), u (needing the quartic discriminant to be a
/// square) and v = sqrt(1-u^2) can be rational.
struct Mt2BranchOutcome {
    std::optional<Rational> u;          // present iff the discriminant is a square
    std::optional<Rational> v_squared;  // 1 - u^2, present with u
    std::optional<Rational> v;          // present iff v_squared is a square
    std::string failing_component;      // "t", "u", "v", or "" when all rational
};

struct Mt2CandidateReport {
    Rational s;
    Rational t_squared;                // 1 - s^2
    std::optional<Rational> t;         // present iff t_squared is a square
    Rational discriminant;             // 43 + 84s + s^2 - 84s^3 - 44s^4
    Mt2BranchOutcome plus_branch;
    Mt2BranchOutcome minus_branch;
};

Mt2CandidateReport mt2_candidate_check(const Rational& s);

}  // namespace quadra
