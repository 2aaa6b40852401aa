#pragma once

#include "quadra/io.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace quadra {

/// The four explicit formulas shipped as regression vectors:
///   qi-three-node-degree4      (d = -1,  expected degree 4)
///   rational-three-node-degree3 (rational nodes, expected degree 3)
///   q11-two-node-degree2       (d = -11, expected degree 2)
///   q3-three-node-degree3      (d = -3,  expected degree 3)
const std::vector<FormulaDocument>& bundled_fixtures();

std::optional<FormulaDocument> fixture_by_label(std::string_view label);

}  // namespace quadra
