#include "quadra/fixtures.hpp"
#include "quadra/io.hpp"

#include <doctest.h>

using namespace quadra;

TEST_SUITE("io") {

TEST_CASE("canonical round trip is a fixed point") {
    for (const auto& doc : bundled_fixtures()) {
        const std::string once = canonical_dump(formula_to_json(doc));
        const FormulaDocument reparsed = formula_from_json(Json::parse(once));
        const std::string twice = canonical_dump(formula_to_json(reparsed));
        CHECK(once == twice);
    }
}

TEST_CASE("non-canonical rationals are normalized on parse") {
    const char* raw = R"({
      "d": -1,
      "nodes": [{"a": "6/4", "b": "0"}, {"a": "-0", "b": "2/2"}],
      "weights": [{"a": "1", "b": "0"}, {"a": "0", "b": "0"}]
    })";
    const auto doc = formula_from_json(Json::parse(raw));
    CHECK(doc.formula.nodes[0].a().str() == "3/2");
    CHECK(doc.formula.nodes[1].a().str() == "0");
    CHECK(doc.formula.nodes[1].b().str() == "1");
    const std::string once = canonical_dump(formula_to_json(doc));
    const std::string twice = canonical_dump(formula_to_json(formula_from_json(Json::parse(once))));
    CHECK(once == twice);
}

TEST_CASE("metadata survives the round trip") {
    FormulaDocument doc = bundled_fixtures()[1];
    REQUIRE(doc.label.has_value());
    const auto j = formula_to_json(doc);
    const auto back = formula_from_json(j);
    CHECK(back.label == doc.label);
    CHECK(back.expected_degree == doc.expected_degree);
    // zero weights are legal
    FormulaDocument plain;
    plain.formula.d = -1;
    plain.formula.nodes = {QuadFieldElement(Rational(0))};
    plain.formula.weights = {QuadFieldElement(Rational(0))};
    CHECK_NOTHROW(formula_from_json(formula_to_json(plain)));
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(formula_from_json(Json::parse("[]")), ParseError);
    CHECK_THROWS_AS(formula_from_json(Json::parse(R"({"d": -1, "nodes": []})")), ParseError);
    CHECK_THROWS_AS(
        formula_from_json(Json::parse(
            R"({"d": 4, "nodes": [{"a":"0","b":"0"}], "weights": [{"a":"1","b":"0"}]})")),
        ParseError);  // d not squarefree-negative
    CHECK_THROWS_AS(
        formula_from_json(Json::parse(
            R"({"d": -1, "nodes": [{"a":"1","b":"0"},{"a":"1","b":"0"}], "weights": [{"a":"1","b":"0"},{"a":"1","b":"0"}]})")),
        ParseError);  // repeated nodes
    CHECK_THROWS_AS(
        formula_from_json(Json::parse(
            R"({"d": -1, "nodes": [{"a":"1","b":"0"}], "weights": []})")),
        ParseError);  // size mismatch
    CHECK_THROWS_AS(
        formula_from_json(Json::parse(
            R"({"d": -1, "nodes": [{"a":"1/0","b":"0"}], "weights": [{"a":"1","b":"0"}]})")),
        ParseError);  // bad rational
}

TEST_CASE("field element tokens") {
    CHECK(parse_field_token("-253754/863405+188933/863405i", -1) ==
          QuadFieldElement(Rational::parse("-253754/863405"), Rational::parse("188933/863405"),
                           -1));
    CHECK(parse_field_token("3/4", -1) == QuadFieldElement(Rational::parse("3/4")));
    CHECK(parse_field_token("i", -1) == QuadFieldElement(Rational(0), Rational(1), -1));
    CHECK(parse_field_token("-i", -1) == QuadFieldElement(Rational(0), Rational(-1), -1));
    CHECK(parse_field_token("1-2i", -1) == QuadFieldElement(Rational(1), Rational(-2), -1));
    CHECK(parse_field_token("-1/2+1/2i", -3) ==
          QuadFieldElement(Rational::parse("-1/2"), Rational::parse("1/2"), -3));
    CHECK(parse_field_token(" -5/6 + 1/6i ", -11) ==
          QuadFieldElement(Rational::parse("-5/6"), Rational::parse("1/6"), -11));
    CHECK_THROWS_AS(parse_field_token("", -1), ParseError);
    CHECK_THROWS_AS(parse_field_token("2+2", -1), ParseError);
    CHECK_THROWS_AS(parse_field_token("1..2i", -1), ParseError);
}

TEST_CASE("gaussian tokens") {
    CHECK(parse_gaussian_token("2+i") == GaussianInt(Int(2), Int(1)));
    CHECK(parse_gaussian_token("-7") == GaussianInt(-7));
    CHECK_THROWS_AS(parse_gaussian_token("1/2"), ParseError);
    CHECK_THROWS_AS(parse_gaussian_token("1+1/2i"), ParseError);
}

TEST_CASE("polynomial display") {
    const Polynomial<Rational> p(std::vector<Rational>{Rational(1), Rational(2), Rational(2),
                                                       Rational(1)});
    CHECK(polynomial_display(p) == "z^3 + 2*z^2 + 2*z + 1");
    const Polynomial<Int> y2(std::vector<Int>{1, 3, 3});
    CHECK(polynomial_display(y2) == "3*z^2 + 3*z + 1");
    const Polynomial<Rational> m(std::vector<Rational>{Rational(1), Rational(-1)});
    CHECK(polynomial_display(m) == "-z + 1");
    CHECK(polynomial_display(Polynomial<Rational>::zero()) == "0");
    const Polynomial<Rational> phi3ish(std::vector<Rational>{
        Rational::parse("1/15"), Rational::parse("2/5"), Rational(1), Rational(1)});
    CHECK(polynomial_display(phi3ish, "x") == "x^3 + x^2 + 2/5*x + 1/15");
}

}  // TEST_SUITE
