#include "quadra/rational.hpp"

#include <cctype>
#include <ostream>

namespace quadra {

namespace {

// Accepts the typographic minus sign as a synonym for '-'.
std::string normalize_minus(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s.push_back('-');
            i += 2;
        } else {
            s.push_back(text[i]);
        }
    }
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string s = normalize_minus(text);
    std::string_view v(s);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);

    bool negative = false;
    if (!v.empty() && v.front() == '-') {
        negative = true;
        v.remove_prefix(1);
    }
    std::string_view num = v, den = "1";
    if (auto slash = v.find('/'); slash != std::string_view::npos) {
        num = v.substr(0, slash);
        den = v.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw std::domain_error("Rational: malformed input '" + std::string(text) + "'");
    Int n(std::string(num), 10), d(std::string(den), 10);
    if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator");
    if (negative) n = -n;
    return Rational(n, d);
}

std::string Rational::str() const {
    std::string s = numerator().get_str();
    if (v_.get_den() != 1) {
        s += '/';
        s += denominator().get_str();
    }
    return s;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q.is_negative()) return std::nullopt;
    Int rn, rd;
    if (!is_perfect_square(q.numerator(), rn)) return std::nullopt;
    if (!is_perfect_square(q.denominator(), rd)) return std::nullopt;
    return Rational(rn, rd);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace quadra
