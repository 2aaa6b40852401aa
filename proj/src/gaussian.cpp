#include "quadra/gaussian.hpp"

#include <cctype>
#include <ostream>

namespace quadra {

namespace {

// Nearest integer to a/n for n > 0, ties toward +infinity.
Int round_div(const Int& a, const Int& n) {
    Int q;
    Int num = 2 * a + n;
    Int den = 2 * n;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

std::pair<GaussianInt, GaussianInt> GaussianInt::divmod(const GaussianInt& x,
                                                        const GaussianInt& y) {
    if (y.is_zero()) throw std::domain_error("GaussianInt: division by zero");
    const GaussianInt t = x * y.conj();
    const Int n = y.norm();
    GaussianInt q(round_div(t.re, n), round_div(t.im, n));
    GaussianInt r = x - q * y;
    return {q, r};
}

GaussianInt GaussianInt::canonical_associate() const {
    if (is_zero()) return *this;
    GaussianInt z = *this;
    for (int i = 0; i < 4; ++i) {
        if (sgn(z.re) > 0 && sgn(z.im) >= 0) return z;
        z = z.times_i();
    }
    throw std::logic_error("GaussianInt: no canonical associate");  // unreachable
}

GaussianInt gcd(GaussianInt x, GaussianInt y) {
    if (x.is_zero() && y.is_zero()) throw std::invalid_argument("gcd(0, 0) in Z[sqrt(-1)]");
    while (!y.is_zero()) {
        auto [q, r] = GaussianInt::divmod(x, y);
        x = y;
        y = r;
    }
    return x.canonical_associate();
}

std::string GaussianInt::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (sgn(re) != 0) s += re.get_str();
    if (sgn(im) != 0) {
        if (sgn(im) > 0 && !s.empty()) s += '+';
        if (im == -1)
            s += '-';
        else if (im != 1)
            s += im.get_str();
        s += 'i';
    }
    return s;
}

GaussianInt GaussianInt::parse(std::string_view text) {
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) continue;
        if (i + 2 < text.size() && c == 0xE2 && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s.push_back('-');
            i += 2;
        } else {
            s.push_back(text[i]);
        }
    }
    if (s.empty()) throw std::domain_error("GaussianInt: empty input");

    auto parse_int = [&](std::string_view v) -> Int {
        bool neg = false;
        if (!v.empty() && (v.front() == '+' || v.front() == '-')) {
            neg = v.front() == '-';
            v.remove_prefix(1);
        }
        if (v.empty()) return neg ? Int(-1) : Int(1);  // bare sign before 'i'
        for (char c : v)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::domain_error("GaussianInt: malformed input '" + std::string(text) + "'");
        Int n(std::string(v), 10);
        return neg ? Int(-n) : n;
    };

    if (s.back() != 'i') return GaussianInt(parse_int(s));
    std::string_view body(s.data(), s.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        // purely imaginary, sign (if any) is at position 0
        return GaussianInt(Int(0), parse_int(body));
    }
    return GaussianInt(parse_int(body.substr(0, split)), parse_int(body.substr(split)));
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& z) { return os << z.str(); }

}  // namespace quadra
