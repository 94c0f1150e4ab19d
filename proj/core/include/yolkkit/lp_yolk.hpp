#pragma once

#include <vector>

#include "yolkkit/median.hpp"
#include "yolkkit/minimax_lp.hpp"

namespace yolkkit {

struct LpYolkResult {
  Ball ball;
  /// Constraints tight at the optimum (distance within 1e-7 of the radius).
  std::vector<Hyperplane> active;
  /// True when the electorate admits no limiting median line (fewer than two
  /// distinct points); the ball is then radius 0 at the coordinate mean.
  bool degenerate = false;
};

/// The finite linear program behind the LP yolk: the smallest ball meeting
/// every limiting median line of a planar electorate.
LpYolkResult lp_yolk(const Electorate& e);

/// Same optimization over an explicit hyperplane family (used for the
/// three-dimensional lift instances, whose limiting median planes are
/// enumerated separately). An empty family degenerates to radius 0 at
/// `fallback_center`.
LpYolkResult lp_yolk_from_hyperplanes(const std::vector<Hyperplane>& planes,
                                      int k, const Point& fallback_center);

/// Coordinate-wise mean of the ideal points.
Point centroid(const Electorate& e);

}  // namespace yolkkit
