#pragma once

#include <string>

#include "pipeline.hpp"

namespace yolkkit {

/// Standalone SVG 1.1 rendering of a planar instance: ideal points, limiting
/// median lines, the yolk and LP yolk circles, and the yolk's tangency
/// points. Layout is deterministic in the input.
std::string render_instance_svg(const Electorate& e, const RunResult& r);

}  // namespace yolkkit
