#include "quadra/newton_polygon.hpp"

#include "quadra/bessel.hpp"

#include <algorithm>
#include <random>

namespace quadra {

namespace {

long cross(const std::pair<long, long>& o, const std::pair<long, long>& a,
           const std::pair<long, long>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

}  // namespace

NewtonPolygon polygon_from_points(std::vector<std::pair<long, Valuation>> points) {
    NewtonPolygon np;
    np.points = std::move(points);

    std::vector<std::pair<long, long>> finite;
    for (const auto& [k, v] : np.points)
        if (!v.is_infinite()) finite.emplace_back(k, v.value());
    if (finite.size() < 2)
        throw std::invalid_argument("polygon_from_points: need at least two finite points");
    std::sort(finite.begin(), finite.end());
    for (std::size_t i = 0; i + 1 < finite.size(); ++i)
        if (finite[i].first == finite[i + 1].first)
            throw std::invalid_argument("polygon_from_points: duplicate abscissa");

    // Monotone chain, lower hull only. Collinear interior points are not
    // vertices, so edge slopes strictly increase.
    for (const auto& p : finite) {
        auto& h = np.vertices;
        while (h.size() >= 2 && cross(h[h.size() - 2], h[h.size() - 1], p) <= 0) h.pop_back();
        h.push_back(p);
    }

    for (std::size_t i = 0; i + 1 < np.vertices.size(); ++i) {
        NewtonPolygon::Edge e;
        e.from = np.vertices[i];
        e.to = np.vertices[i + 1];
        e.slope = Rational(Int(e.to.second - e.from.second), Int(e.to.first - e.from.first));
        np.edges.push_back(std::move(e));
    }
    return np;
}

NewtonPolygon polygon_of(const std::vector<GaussianInt>& descending_coeffs,
                         const ValuationContext& ctx) {
    std::vector<std::pair<long, Valuation>> pts;
    pts.reserve(descending_coeffs.size());
    for (std::size_t k = 0; k < descending_coeffs.size(); ++k)
        pts.emplace_back(static_cast<long>(k), ctx(descending_coeffs[k]));
    return polygon_from_points(std::move(pts));
}

NewtonPolygon polygon_of(const std::vector<Int>& descending_coeffs, const ValuationContext& ctx) {
    std::vector<std::pair<long, Valuation>> pts;
    pts.reserve(descending_coeffs.size());
    for (std::size_t k = 0; k < descending_coeffs.size(); ++k)
        pts.emplace_back(static_cast<long>(k), ctx(descending_coeffs[k]));
    return polygon_from_points(std::move(pts));
}

bool slopes_integral(const NewtonPolygon& np) {
    for (const auto& e : np.edges)
        if (!e.slope.is_integer()) return false;
    return true;
}

long bertrand_prime(unsigned l) {
    if (l < 7) throw std::invalid_argument("bertrand_prime: l must be >= 7");
    for (long p = static_cast<long>(l) / 2 + 1; p <= static_cast<long>(l); ++p) {
        if (2 * p <= static_cast<long>(l) + 1) continue;  // need (l+1)/2 < p
        if (p % 4 == 3 && is_prime(p)) return p;
    }
    throw std::logic_error("bertrand_prime: no prime found (cannot happen for l >= 7)");
}

ValuationContext prime_for_r(unsigned r) {
    if (r < 3) throw std::invalid_argument("prime_for_r: r must be >= 3");
    if (r <= 4) return ValuationContext::inert_prime(3);
    if (r <= 6) return ValuationContext::gaussian_prime_two_plus_i();
    return ValuationContext::inert_prime(bertrand_prime(r));
}

CertificateReport nonexistence_certificate(unsigned r, const GaussianInt& s,
                                           const GaussianInt& t) {
    CertificateReport rep;
    rep.r = r;
    rep.s = s;
    rep.t = t;
    const ValuationContext ctx = prime_for_r(r);
    rep.prime = ctx.description();
    rep.polygon = polygon_of(quasi_bessel_descending(r, s, t), ctx);
    for (const auto& e : rep.polygon.edges) {
        if (!e.slope.is_integer()) {
            rep.nonintegral_found = true;
            rep.witness_slope = e.slope;
            break;
        }
    }
    return rep;
}

std::vector<std::pair<GaussianInt, GaussianInt>> sample_coprime_pairs(std::size_t n,
                                                                      std::uint64_t seed,
                                                                      long bound) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<std::pair<GaussianInt, GaussianInt>> out;
    out.reserve(n);
    while (out.size() < n) {
        GaussianInt s(Int(dist(rng)), Int(dist(rng)));
        GaussianInt t(Int(dist(rng)), Int(dist(rng)));
        if (t.is_zero()) continue;
        if (s.is_zero() && t.is_zero()) continue;
        if (!gcd(s, t).is_unit()) continue;
        out.emplace_back(std::move(s), std::move(t));
    }
    return out;
}

}  // namespace quadra
