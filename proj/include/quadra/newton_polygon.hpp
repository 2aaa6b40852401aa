#pragma once

#include "quadra/gaussian.hpp"
#include "quadra/rational.hpp"
#include "quadra/valuation.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace quadra {

/// Newton polygon of a coefficient list under a discrete valuation.
/// Points are (k, v(a_k)) in the a_k convention (a_0 = leading coefficient);
/// infinite points (zero coefficients) are recorded but excluded from the
/// hull. Vertices are the corners of the lower convex hull of the finite
/// points; edge slopes strictly increase left to right.
struct NewtonPolygon {
    struct Edge {
        std::pair<long, long> from;
        std::pair<long, long> to;
        Rational slope;
    };

    std::vector<std::pair<long, Valuation>> points;
    std::vector<std::pair<long, long>> vertices;
    std::vector<Edge> edges;
};

/// Lower hull of pre-valuated points (k ascending). Needs at least two
/// finite points.
NewtonPolygon polygon_from_points(std::vector<std::pair<long, Valuation>> points);

NewtonPolygon polygon_of(const std::vector<GaussianInt>& descending_coeffs,
                         const ValuationContext& ctx);
NewtonPolygon polygon_of(const std::vector<Int>& descending_coeffs, const ValuationContext& ctx);

/// True iff every edge slope is an integer. A false result certifies (by the
/// contrapositive of the integral-slope criterion) that not every root of the
/// polynomial lies in the valuation's field.
bool slopes_integral(const NewtonPolygon& np);

/// Smallest prime p with (l+1)/2 < p <= l and p = 3 (mod 4); exists for all
/// l >= 7.
long bertrand_prime(unsigned l);

/// The valuation used to certify nonexistence at parameter r:
/// r in {3, 4} -> p = 3; r in {5, 6} -> the Gaussian prime 2+i;
/// r >= 7 -> bertrand_prime(r). All selected rational primes are = 3 (mod 4),
/// so they act on Z[sqrt(-1)] through the inert rule.
ValuationContext prime_for_r(unsigned r);

struct CertificateReport {
    unsigned r = 0;
    GaussianInt s;
    GaussianInt t;
    std::string prime;
    NewtonPolygon polygon;
    bool nonintegral_found = false;
    std::optional<Rational> witness_slope;
};

/// Builds quasi_bessel(r, s, t), takes its polygon under prime_for_r(r), and
/// reports whether a non-integral slope exists. A positive report certifies
/// that this parameter choice admits no degree-2r formula with all r+1 nodes
/// in Q(sqrt(-1)).
CertificateReport nonexistence_certificate(unsigned r, const GaussianInt& s,
                                           const GaussianInt& t);

/// Deterministic coprime (s, t) samples with t != 0 and components in
/// [-bound, bound]; used by the certificate batch runs.
std::vector<std::pair<GaussianInt, GaussianInt>> sample_coprime_pairs(std::size_t n,
                                                                      std::uint64_t seed,
                                                                      long bound);

}  // namespace quadra
