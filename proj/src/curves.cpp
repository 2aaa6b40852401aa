#include "quadra/curves.hpp"

#include "quadra/bessel.hpp"

#include <mutex>
#include <numeric>

namespace quadra {

Rational QuarticCurve::rhs(const Rational& y) const {
    return (((c4 * y + c3) * y + c2) * y + c1) * y + c0;
}

bool QuarticCurve::contains(const Rational& y, const QuadFieldElement& w) const {
    return w * w == QuadFieldElement(rhs(y));
}

QuarticCurve curve_cdk_r2() { return {Rational(-75), Rational(-120), Rational(-84), Rational(-28), Rational(-4)}; }

QuarticCurve curve_mt2() { return {Rational(-44), Rational(-84), Rational(1), Rational(84), Rational(43)}; }

namespace {

std::mutex f_cache_mutex;
std::vector<BivariatePolynomial> f_cache;

BivariatePolynomial make_f_poly(unsigned l) {
    const Polynomial<Rational> yl = bessel_y(l).lift<Rational>();
    const Polynomial<Rational> yl1 = bessel_y(l + 1).lift<Rational>();
    auto tensor = [](const Polynomial<Rational>& in_x, const Polynomial<Rational>& in_y) {
        std::vector<Polynomial<Rational>> c;
        c.reserve(static_cast<std::size_t>(in_x.degree()) + 1);
        for (int k = 0; k <= in_x.degree(); ++k)
            c.push_back(in_y * in_x.coefficient(static_cast<std::size_t>(k)));
        return BivariatePolynomial(std::move(c));
    };
    return divide_out_x_minus_y(tensor(yl1, yl) - tensor(yl, yl1));
}

}  // namespace

BivariatePolynomial f_poly(unsigned l) {
    std::lock_guard<std::mutex> lock(f_cache_mutex);
    while (f_cache.size() <= l) f_cache.push_back(make_f_poly(static_cast<unsigned>(f_cache.size())));
    return f_cache[l];
}

BivariatePolynomial cd_kernel(unsigned l) {
    const Rational scale(Int(1), Int(2 * static_cast<long>(l) + 1));
    BivariatePolynomial f = f_poly(l);
    std::vector<Polynomial<Rational>> c;
    c.reserve(static_cast<std::size_t>(f.degree()) + 1);
    for (int k = 0; k <= f.degree(); ++k)
        c.push_back(f.coefficient(static_cast<std::size_t>(k)) * scale);
    return BivariatePolynomial(std::move(c));
}

bool pairwise_compatible(const std::vector<QuadFieldElement>& nodes, unsigned r) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j])
                throw std::invalid_argument("pairwise_compatible: nodes must be distinct");
    const BivariatePolynomial f = f_poly(r);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (i == j) continue;
            if (!eval_bivariate(f, nodes[i], nodes[j]).is_zero()) return false;
        }
    return true;
}

QuadratureFormula nodes_from_point(const CurvePoint& p) {
    const QuarticCurve curve = curve_cdk_r2();
    if (!p.w.is_rational() && p.w.d() != -1)
        throw std::invalid_argument("nodes_from_point: w must lie in Q(sqrt(-1))");
    if (!curve.contains(p.y, p.w))
        throw std::invalid_argument("nodes_from_point: point is not on the curve");

    const Rational& y = p.y;
    const Rational A = Rational(15) * y * y + Rational(15) * y + Rational(5);
    const Rational B = Rational(15) * y * y + Rational(14) * y + Rational(4);
    const QuadFieldElement denom = QuadFieldElement(Rational(2) * A);
    const QuadFieldElement z2 = (p.w - QuadFieldElement(B)) / denom;
    const QuadFieldElement z3 = (-p.w - QuadFieldElement(B)) / denom;
    const QuadFieldElement z1 = QuadFieldElement(y);
    if (z1 == z2 || z1 == z3 || z2 == z3)
        throw std::invalid_argument("nodes_from_point: degenerate point (coincident nodes)");

    return construct_degree_r({z1, z2, z3});
}

std::vector<CurvePoint> search_points(const QuarticCurve& curve, long height, SquareMode mode) {
    if (height < 1) throw std::invalid_argument("search_points: height must be >= 1");

    // Work with the integer numerator: for y = p/q in lowest terms,
    // rhs(y) = N(p, q) / (L q^4) with N integral, so rhs is a square exactly
    // when N*L is a (nonnegative) perfect square, and d times a square when
    // -N*L is one.
    Int lcm_den(1);
    for (const Rational* c : {&curve.c4, &curve.c3, &curve.c2, &curve.c1, &curve.c0})
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c->denominator().get_mpz_t());
    const Int n4 = curve.c4.numerator() * (lcm_den / curve.c4.denominator());
    const Int n3 = curve.c3.numerator() * (lcm_den / curve.c3.denominator());
    const Int n2 = curve.c2.numerator() * (lcm_den / curve.c2.denominator());
    const Int n1 = curve.c1.numerator() * (lcm_den / curve.c1.denominator());
    const Int n0 = curve.c0.numerator() * (lcm_den / curve.c0.denominator());

    std::vector<CurvePoint> out;
    Int root;
    for (long q = 1; q <= height; ++q) {
        for (long pp = -height; pp <= height; ++pp) {
            if (std::gcd(pp < 0 ? -pp : pp, q) != 1) continue;
            const Int P(pp), Q(q);
            const Int num = (((n4 * P + n3 * Q) * P + n2 * Q * Q) * P + n1 * Q * Q * Q) * P +
                            n0 * Q * Q * Q * Q;
            const Rational y(P, Q);
            const Int scaled = num * lcm_den;
            if (sgn(scaled) >= 0 && is_perfect_square(scaled, root)) {
                const Rational w = Rational(root, Q * Q * lcm_den);
                out.push_back({y, QuadFieldElement(w)});
                if (!w.is_zero()) out.push_back({y, QuadFieldElement(-w)});
            } else if (mode == SquareMode::gaussian && sgn(scaled) < 0 &&
                       is_perfect_square(Int(-scaled), root)) {
                const Rational b = Rational(root, Q * Q * lcm_den);
                out.push_back({y, QuadFieldElement(Rational(0), b, -1)});
                out.push_back({y, QuadFieldElement(Rational(0), -b, -1)});
            }
        }
    }
    return out;
}

Mt2CandidateReport mt2_candidate_check(const Rational& s) {
    const Rational den = Rational(106) + Rational(224) * s + Rational(120) * s * s;
    if (den.is_zero())
        throw std::domain_error("mt2_candidate_check: vanishing denominator");

    Mt2CandidateReport rep;
    rep.s = s;
    rep.t_squared = Rational(1) - s * s;
    rep.t = exact_sqrt(rep.t_squared);
    rep.discriminant = Rational(43) + Rational(84) * s + s * s - Rational(84) * s * s * s -
                       Rational(44) * s * s * s * s;

    const Rational u_num_base = -(Rational(91) + Rational(202) * s + Rational(112) * s * s);
    const auto disc_root = exact_sqrt(rep.discriminant);
    auto branch = [&](int sign) {
        Mt2BranchOutcome b;
        if (!rep.t) b.failing_component = "t";
        if (!disc_root) {
            if (b.failing_component.empty()) b.failing_component = "u";
            return b;
        }
        const Rational u = (u_num_base + Rational(2 * sign) * *disc_root) / den;
        b.u = u;
        b.v_squared = Rational(1) - u * u;
        b.v = exact_sqrt(*b.v_squared);
        if (b.failing_component.empty() && !b.v) b.failing_component = "v";
        return b;
    };
    rep.plus_branch = branch(1);
    rep.minus_branch = branch(-1);
    return rep;
}

}  // namespace quadra
