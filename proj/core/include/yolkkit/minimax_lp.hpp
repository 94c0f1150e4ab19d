#pragma once

#include <vector>

#include "yolkkit/geometry.hpp"

namespace yolkkit {

/// Smallest ball (center, radius) intersecting every hyperplane in `lines`:
///   min r  s.t.  -r <= a_i.c - b_i <= r
/// solved as a (k+1)-variable linear program by a randomized-incremental
/// method with a fixed internal seed, then polished on the active basis.
/// Non-unique centers are resolved to the minimum-norm point of the optimal
/// face. Deterministic: identical input gives identical output.
///
/// Throws empty_constraint_set for an empty list and unsupported_dimension
/// for k outside {2, 3}.
Ball solve_minimax_lines(const std::vector<Hyperplane>& lines, int k);

}  // namespace yolkkit
