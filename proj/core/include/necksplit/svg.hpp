#pragma once

#include <optional>
#include <string>
#include <vector>

#include "necksplit/curve.hpp"
#include "necksplit/geometry.hpp"

namespace necksplit {

/// Curve with each piece of the split stroked in its group color and cut points marked.
/// Curves in R^3 are drawn by their projection onto the first two coordinates.
[[nodiscard]] std::string svg_loop_split(const Curve& curve, const LoopSplit& split);

/// Curve with the inscribed quadrilateral overlaid.
[[nodiscard]] std::string svg_quadrilateral(const Curve& curve, const InscribedQuadrilateral& quad);

}  // namespace necksplit
