#pragma once

#include <string>

#include "unfold/plmap.hpp"

namespace unfold {

// Deterministic 800x800 SVG of a piecewise-linear graph: frame, dashed piece
// boundaries, clipped diagonal, the graph polyline and its nodes, exact
// rational range labels. Pixel coordinates are the only floating point in
// the output.
std::string render_plmap_svg(const PLMap& f, const std::string& label);

}  // namespace unfold
