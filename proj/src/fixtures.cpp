#include "quadra/fixtures.hpp"

namespace quadra {

namespace {

QuadFieldElement elem(const char* a, const char* b, long d) {
    return QuadFieldElement(Rational::parse(a), Rational::parse(b), d);
}

FormulaDocument make_doc(long d, std::vector<QuadFieldElement> nodes,
                         std::vector<QuadFieldElement> weights, const char* label, int expected) {
    FormulaDocument doc;
    doc.formula.d = d;
    doc.formula.nodes = std::move(nodes);
    doc.formula.weights = std::move(weights);
    doc.formula.validate();
    doc.label = label;
    doc.expected_degree = expected;
    return doc;
}

std::vector<FormulaDocument> build_fixtures() {
    std::vector<FormulaDocument> out;

    out.push_back(make_doc(
        -1,
        {elem("-264/743", "0", -1), elem("-253754/863405", "188933/863405", -1),
         elem("-253754/863405", "-188933/863405", -1)},
        {elem("304758098401/73863713379", "0", -1),
         elem("-115447192511/73863713379", "28870417761487643/27910585919669214", -1),
         elem("-115447192511/73863713379", "-28870417761487643/27910585919669214", -1)},
        "qi-three-node-degree4", 4));

    out.push_back(make_doc(
        -1,
        {elem("1/2", "0", -1), elem("1/5", "0", -1), elem("-27/44", "0", -1)},
        {elem("172/441", "0", -1), elem("-1625/1611", "0", -1), elem("42592/26313", "0", -1)},
        "rational-three-node-degree3", 3));

    out.push_back(make_doc(-11, {elem("-5/6", "1/6", -11), elem("-5/6", "-1/6", -11)},
                           {elem("1/2", "1/22", -11), elem("1/2", "-1/22", -11)},
                           "q11-two-node-degree2", 2));

    out.push_back(make_doc(
        -3, {elem("-1", "0", -3), elem("-1/2", "1/2", -3), elem("-1/2", "-1/2", -3)},
        {elem("2/3", "0", -3), elem("1/6", "1/18", -3), elem("1/6", "-1/18", -3)},
        "q3-three-node-degree3", 3));

    return out;
}

}  // namespace

const std::vector<FormulaDocument>& bundled_fixtures() {
    static const std::vector<FormulaDocument> fixtures = build_fixtures();
    return fixtures;
}

std::optional<FormulaDocument> fixture_by_label(std::string_view label) {
    for (const auto& doc : bundled_fixtures())
        if (doc.label && *doc.label == label) return doc;
    return std::nullopt;
}

}  // namespace quadra
