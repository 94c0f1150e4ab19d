#pragma once

#include <vector>

#include "yolkkit/geometry.hpp"

namespace yolkkit {

/// A finite electorate of ideal points. Duplicates are allowed and counted
/// with multiplicity.
struct Electorate {
  std::vector<Point> points;
  int dim = 0;

  static Electorate from_points(std::vector<Point> pts);
  int size() const { return static_cast<int>(points.size()); }
};

struct SideCounts {
  int left = 0;   // a.p <= b + tol
  int right = 0;  // a.p >= b - tol
  int on = 0;     // |a.p - b| <= tol
};

/// Closed-halfspace counts with tolerance kOnPlaneTol on the projections.
/// left + right - on == |I| always holds.
SideCounts side_counts(const Hyperplane& h, const Electorate& e);

/// H is median when at least half the ideal points lie in each closed
/// halfspace.
bool is_median(const Hyperplane& h, const Electorate& e);

/// The interval of offsets b for which H(a, b) is median. A single value
/// when |I| is odd.
struct MedianSlab {
  Direction direction;
  double b_lo = 0.0;
  double b_hi = 0.0;
};

MedianSlab median_slab(const Direction& a, const Electorate& e);

/// Result of enumerating limiting median lines (k = 2). `degenerate` is set
/// when the electorate has fewer than two distinct points, in which case the
/// list is empty and the LP yolk collapses to a point.
struct LimitingLines {
  std::vector<Hyperplane> lines;
  bool degenerate = false;
};

/// All distinct median lines through at least two ideal points, deduplicated
/// under sign equivalence and collinear coincidence, in a deterministic
/// order.
LimitingLines enumerate_limiting_median_lines(const Electorate& e);

struct RotationResult {
  Hyperplane hyperplane;
  double angle = 0.0;  // minimal rotation, >= 0
  Point second_point;
};

/// Rotates a median line about an ideal point on it, in the given sense,
/// until it first hits a second ideal point. Returns angle 0 when the line
/// is already limiting. Throws no_second_point when the electorate has no
/// point distinct from the pivot.
RotationResult rotate_to_limiting(const Hyperplane& h, const Point& pivot,
                                  const Electorate& e, RotationSense sense);

}  // namespace yolkkit
