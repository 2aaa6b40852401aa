#include "quadra/bessel.hpp"

#include <mutex>
#include <sstream>
#include <vector>

namespace quadra {

Rational moment(unsigned j) {
    Int num;
    mpz_ui_pow_ui(num.get_mpz_t(), 2, j);
    if (j % 2 == 1) num = -num;
    return Rational(num, factorial(j + 1));
}

namespace {

// Grow-on-demand caches; guarded so the family behaves as a pure function
// under concurrent access.
std::mutex family_mutex;
std::vector<Polynomial<Int>> y_cache;
std::vector<Polynomial<Rational>> phi_cache;

Polynomial<Int> make_bessel_y(unsigned n) {
    std::vector<Int> c;
    c.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k)
        c.push_back(binomial(n + k, 2 * k) * double_factorial(2 * static_cast<long>(k) - 1));
    return Polynomial<Int>(std::move(c));
}

}  // namespace

Polynomial<Int> bessel_y(unsigned n) {
    std::lock_guard<std::mutex> lock(family_mutex);
    while (y_cache.size() <= n) y_cache.push_back(make_bessel_y(static_cast<unsigned>(y_cache.size())));
    return y_cache[n];
}

Polynomial<Rational> monic_phi(unsigned n) {
    {
        // phi_n is never the zero polynomial, so an empty slot means "not yet computed".
        std::lock_guard<std::mutex> lock(family_mutex);
        if (n < phi_cache.size() && !phi_cache[n].is_zero()) return phi_cache[n];
    }
    const Polynomial<Int> y = bessel_y(n);
    const Rational lead_inv = Rational(Int(1), double_factorial(2 * static_cast<long>(n) - 1));
    const Polynomial<Rational> phi = y.lift<Rational>() * lead_inv;
    std::lock_guard<std::mutex> lock(family_mutex);
    if (phi_cache.size() <= n) phi_cache.resize(n + 1);
    phi_cache[n] = phi;
    return phi;
}

Rational h_value(unsigned n) {
    const Polynomial<Rational> phi = monic_phi(n);
    return moment_functional(phi * phi);
}

std::vector<GaussianInt> quasi_bessel_descending(unsigned r, const GaussianInt& s,
                                                 const GaussianInt& t) {
    if (r < 1) throw std::invalid_argument("quasi_bessel: r must be >= 1");
    if (t.is_zero()) throw std::invalid_argument("quasi_bessel: t must be nonzero");
    if (!gcd(s, t).is_unit()) throw std::invalid_argument("quasi_bessel: gcd(s, t) must be 1");

    const long R = static_cast<long>(r);
    std::vector<GaussianInt> a(r + 2);
    a[0] = double_factorial(2 * R + 1) * t;
    a[1] = double_factorial(2 * R - 1) * (Int(2 * R + 1) * t + s);
    for (unsigned k = 2; k <= r + 1; ++k) {
        const unsigned long m = 2 * (r + 1 - k);  // 2(r+1-k)
        const Int coeff_t = binomial(2 * (r + 1) - k, m);
        const Int coeff_s = binomial(2 * r + 1 - k, m);
        a[k] = double_factorial(static_cast<long>(m) - 1) * (coeff_t * t + coeff_s * s);
    }

    // Cross-check against the direct expansion t*y_{r+1} + s*y_r.
    const Polynomial<GaussianInt> direct =
        bessel_y(r + 1).lift<GaussianInt>() * t + bessel_y(r).lift<GaussianInt>() * s;
    const Polynomial<GaussianInt> closed = Polynomial<GaussianInt>::from_descending(a);
    if (closed != direct) {
        std::ostringstream os;
        os << "quasi_bessel: closed form disagrees with expansion at r=" << r;
        throw std::logic_error(os.str());
    }
    return a;
}

Polynomial<GaussianInt> quasi_bessel(unsigned r, const GaussianInt& s, const GaussianInt& t) {
    return Polynomial<GaussianInt>::from_descending(quasi_bessel_descending(r, s, t));
}

}  // namespace quadra
