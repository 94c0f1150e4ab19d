#include "yolkkit/lp_yolk.hpp"

#include <cmath>

namespace yolkkit {

Point centroid(const Electorate& e) {
  std::vector<double> c(static_cast<size_t>(e.dim), 0.0);
  for (const Point& p : e.points) {
    for (int j = 0; j < e.dim; ++j) c[static_cast<size_t>(j)] += p[j];
  }
  for (double& v : c) v /= static_cast<double>(e.size());
  return Point(std::move(c));
}

LpYolkResult lp_yolk_from_hyperplanes(const std::vector<Hyperplane>& planes,
                                      int k, const Point& fallback_center) {
  if (planes.empty()) {
    return LpYolkResult{Ball{fallback_center, 0.0}, {}, true};
  }
  Ball ball = solve_minimax_lines(planes, k);
  LpYolkResult out;
  out.ball = ball;
  for (const Hyperplane& h : planes) {
    if (std::abs(point_hyperplane_distance(ball.center, h) - ball.radius) <=
        1e-7) {
      out.active.push_back(h);
    }
  }
  return out;
}

LpYolkResult lp_yolk(const Electorate& e) {
  if (e.dim != 2) {
    throw_error(ErrorCode::unsupported_dimension, "lp_yolk requires k = 2");
  }
  LimitingLines lines = enumerate_limiting_median_lines(e);
  if (lines.degenerate) {
    // No limiting median line exists; the LP collapses to a point.
    return LpYolkResult{Ball{centroid(e), 0.0}, {}, true};
  }
  return lp_yolk_from_hyperplanes(lines.lines, 2, centroid(e));
}

}  // namespace yolkkit
