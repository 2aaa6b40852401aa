#pragma once

#include "quadra/gaussian.hpp"
#include "quadra/polynomial.hpp"
#include "quadra/quad_field.hpp"
#include "quadra/quadrature.hpp"
#include "quadra/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace quadra {

using Json = nlohmann::ordered_json;

/// Raised on malformed textual/JSON input; the CLI maps it to exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A formula plus optional metadata, as carried by the JSON documents.
struct FormulaDocument {
    QuadratureFormula formula;
    std::optional<std::string> label;
    std::optional<int> expected_degree;
};

Json qfe_to_json(const QuadFieldElement& z);
QuadFieldElement qfe_from_json(const Json& j, long d);

Json formula_to_json(const FormulaDocument& doc);
FormulaDocument formula_from_json(const Json& j);

/// Canonical serialization: fixed key order, two-space indent, trailing
/// newline. parse-then-dump of any valid document is a fixed point.
std::string canonical_dump(const Json& j);

/// "a", "a+bi", "a-bi", "bi", "i" with rational a, b; 'i' stands for sqrt(d).
QuadFieldElement parse_field_token(std::string_view text, long d);

/// Same grammar restricted to integers.
GaussianInt parse_gaussian_token(std::string_view text);

/// Pretty display by descending powers: "z^3 + 2*z^2 + 2*z + 1".
std::string polynomial_display(const Polynomial<Rational>& p, const std::string& var = "z");
std::string polynomial_display(const Polynomial<Int>& p, const std::string& var = "z");

}  // namespace quadra
