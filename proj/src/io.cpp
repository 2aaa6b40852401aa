#include "quadra/io.hpp"

#include <cctype>
#include <functional>

namespace quadra {

namespace {

Rational parse_rational_or_throw(std::string_view text, const char* where) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string(where) + ": " + e.what());
    }
}

}  // namespace

Json qfe_to_json(const QuadFieldElement& z) {
    Json j;
    j["a"] = z.a().str();
    j["b"] = z.b().str();
    return j;
}

QuadFieldElement qfe_from_json(const Json& j, long d) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j["a"].is_string() ||
        !j["b"].is_string())
        throw ParseError("field element must be an object {\"a\": ..., \"b\": ...}");
    const Rational a = parse_rational_or_throw(j["a"].get<std::string>(), "a");
    const Rational b = parse_rational_or_throw(j["b"].get<std::string>(), "b");
    try {
        return QuadFieldElement(a, b, d);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Json formula_to_json(const FormulaDocument& doc) {
    Json j;
    j["d"] = doc.formula.d;
    j["nodes"] = Json::array();
    for (const auto& z : doc.formula.nodes) j["nodes"].push_back(qfe_to_json(z));
    j["weights"] = Json::array();
    for (const auto& x : doc.formula.weights) j["weights"].push_back(qfe_to_json(x));
    if (doc.label || doc.expected_degree) {
        Json meta;
        if (doc.label) meta["label"] = *doc.label;
        if (doc.expected_degree) meta["expected_degree"] = *doc.expected_degree;
        j["metadata"] = std::move(meta);
    }
    return j;
}

FormulaDocument formula_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("formula document must be a JSON object");
    if (!j.contains("d") || !j["d"].is_number_integer())
        throw ParseError("formula document needs an integer \"d\"");
    if (!j.contains("nodes") || !j["nodes"].is_array() || !j.contains("weights") ||
        !j["weights"].is_array())
        throw ParseError("formula document needs \"nodes\" and \"weights\" arrays");

    FormulaDocument doc;
    doc.formula.d = j["d"].get<long>();
    for (const auto& n : j["nodes"]) doc.formula.nodes.push_back(qfe_from_json(n, doc.formula.d));
    for (const auto& w : j["weights"])
        doc.formula.weights.push_back(qfe_from_json(w, doc.formula.d));
    if (j.contains("metadata")) {
        const Json& meta = j["metadata"];
        if (!meta.is_object()) throw ParseError("metadata must be an object");
        if (meta.contains("label")) doc.label = meta["label"].get<std::string>();
        if (meta.contains("expected_degree")) doc.expected_degree = meta["expected_degree"].get<int>();
    }
    try {
        doc.formula.validate();
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
    return doc;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

QuadFieldElement parse_field_token(std::string_view text, long d) {
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
    if (s.empty()) throw ParseError("empty node token");

    auto rational_part = [&](std::string_view v, bool default_one) -> Rational {
        if (v.empty() || v == "+") {
            if (default_one) return Rational(1);
            throw ParseError("malformed node token '" + std::string(text) + "'");
        }
        if (v == "-") {
            if (default_one) return Rational(-1);
            throw ParseError("malformed node token '" + std::string(text) + "'");
        }
        if (v.front() == '+') v.remove_prefix(1);
        try {
            return Rational::parse(v);
        } catch (const std::exception&) {
            throw ParseError("malformed node token '" + std::string(text) + "'");
        }
    };

    if (s.back() != 'i') return QuadFieldElement(rational_part(s, false), Rational(0), d);
    std::string_view body(s.data(), s.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos)
        return QuadFieldElement(Rational(0), rational_part(body, true), d);
    return QuadFieldElement(rational_part(body.substr(0, split), false),
                            rational_part(body.substr(split), true), d);
}

GaussianInt parse_gaussian_token(std::string_view text) {
    const QuadFieldElement z = parse_field_token(text, -1);
    if (!z.a().is_integer() || !z.b().is_integer())
        throw ParseError("expected a Gaussian integer, got '" + std::string(text) + "'");
    return GaussianInt(z.a().numerator(), z.b().numerator());
}

namespace {

template <typename T>
std::string display_impl(const Polynomial<T>& p, const std::string& var,
                         const std::function<std::string(const T&)>& coeff_str,
                         const std::function<bool(const T&)>& is_neg,
                         const std::function<T(const T&)>& neg, const T& one) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        T c = p.coefficient(static_cast<std::size_t>(k));
        if (value_is_zero(c)) continue;
        const bool first = out.empty();
        if (is_neg(c)) {
            out += first ? "-" : " - ";
            c = neg(c);
        } else if (!first) {
            out += " + ";
        }
        const bool unit = c == one;
        if (k == 0) {
            out += coeff_str(c);
        } else {
            if (!unit) out += coeff_str(c) + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace

std::string polynomial_display(const Polynomial<Rational>& p, const std::string& var) {
    return display_impl<Rational>(
        p, var, [](const Rational& c) { return c.str(); },
        [](const Rational& c) { return c.is_negative(); }, [](const Rational& c) { return -c; },
        Rational(1));
}

std::string polynomial_display(const Polynomial<Int>& p, const std::string& var) {
    return display_impl<Int>(
        p, var, [](const Int& c) { return c.get_str(); },
        [](const Int& c) { return sgn(c) < 0; }, [](const Int& c) { return Int(-c); }, Int(1));
}

}  // namespace quadra
