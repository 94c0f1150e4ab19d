#include "yolkkit/median.hpp"

#include <algorithm>
#include <cmath>

namespace yolkkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

double canonical_angle(const Hyperplane& h) {
  // Canonical normals have their first nonzero coordinate positive, so the
  // angle lies in (-pi/2, pi/2].
  return std::atan2(h.normal[1], h.normal[0]);
}

}  // namespace

Electorate Electorate::from_points(std::vector<Point> pts) {
  if (pts.empty()) {
    throw_error(ErrorCode::empty_electorate, "electorate has no points");
  }
  int k = pts.front().dim();
  for (const Point& p : pts) {
    validate_point(p);
    if (p.dim() != k) {
      throw_error(ErrorCode::dimension_mismatch,
                  "electorate points have mixed dimensions");
    }
  }
  return Electorate{std::move(pts), k};
}

SideCounts side_counts(const Hyperplane& h, const Electorate& e) {
  if (h.dim() != e.dim) {
    throw_error(ErrorCode::dimension_mismatch,
                "side_counts: hyperplane/electorate dimension mismatch");
  }
  SideCounts c;
  for (const Point& p : e.points) {
    double s = dot(h.normal, p) - h.offset;
    if (s <= kOnPlaneTol) ++c.left;
    if (s >= -kOnPlaneTol) ++c.right;
    if (std::abs(s) <= kOnPlaneTol) ++c.on;
  }
  return c;
}

bool is_median(const Hyperplane& h, const Electorate& e) {
  SideCounts c = side_counts(h, e);
  int n = e.size();
  return 2 * c.left >= n && 2 * c.right >= n;
}

MedianSlab median_slab(const Direction& a, const Electorate& e) {
  if (e.points.empty()) {
    throw_error(ErrorCode::empty_electorate, "median_slab: empty electorate");
  }
  if (a.dim() != e.dim) {
    throw_error(ErrorCode::dimension_mismatch,
                "median_slab: direction/electorate dimension mismatch");
  }
  std::vector<double> proj;
  proj.reserve(e.points.size());
  for (const Point& p : e.points) proj.push_back(dot(a.unit, p));
  std::sort(proj.begin(), proj.end());
  int n = static_cast<int>(proj.size());
  MedianSlab slab;
  slab.direction = a;
  if (n % 2 == 1) {
    slab.b_lo = slab.b_hi = proj[static_cast<size_t>(n / 2)];
  } else {
    slab.b_lo = proj[static_cast<size_t>(n / 2 - 1)];
    slab.b_hi = proj[static_cast<size_t>(n / 2)];
  }
  return slab;
}

LimitingLines enumerate_limiting_median_lines(const Electorate& e) {
  if (e.dim != 2) {
    throw_error(ErrorCode::unsupported_dimension,
                "enumerate_limiting_median_lines requires k = 2");
  }
  const int n = e.size();
  bool has_distinct_pair = false;
  for (int i = 0; i < n && !has_distinct_pair; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (distance(e.points[static_cast<size_t>(i)],
                   e.points[static_cast<size_t>(j)]) > 1e-12) {
        has_distinct_pair = true;
        break;
      }
    }
  }
  if (!has_distinct_pair) return LimitingLines{{}, true};

  std::vector<Hyperplane> lines;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Point& p = e.points[static_cast<size_t>(i)];
      const Point& q = e.points[static_cast<size_t>(j)];
      if (distance(p, q) <= 1e-12) continue;  // duplicate point, no line
      Hyperplane h = line_through_points(p, q);
      if (!is_median(h, e)) continue;
      bool dup = false;
      for (const Hyperplane& seen : lines) {
        if (same_hyperplane(seen, h, 1e-9)) {
          dup = true;
          break;
        }
      }
      if (!dup) lines.push_back(std::move(h));
    }
  }
  std::sort(lines.begin(), lines.end(),
            [](const Hyperplane& a, const Hyperplane& b) {
              double ta = canonical_angle(a), tb = canonical_angle(b);
              if (ta != tb) return ta < tb;
              return a.offset < b.offset;
            });
  return LimitingLines{std::move(lines), false};
}

RotationResult rotate_to_limiting(const Hyperplane& h, const Point& pivot,
                                  const Electorate& e, RotationSense sense) {
  if (e.dim != 2 || h.dim() != 2) {
    throw_error(ErrorCode::unsupported_dimension,
                "rotate_to_limiting requires k = 2");
  }
  if (point_hyperplane_distance(pivot, h) > kOnPlaneTol) {
    throw_error(ErrorCode::pivot_not_on_hyperplane,
                "rotate_to_limiting: pivot is not on the line");
  }

  // Already limiting: a second ideal point lies on the line.
  for (const Point& p : e.points) {
    if (distance(p, pivot) <= 1e-12) continue;
    if (point_hyperplane_distance(p, h) <= kOnPlaneTol) {
      return RotationResult{h, 0.0, p};
    }
  }

  // Line direction angle, modulo pi.
  double phi = wrap_angle_pi(std::atan2(h.normal[0], -h.normal[1]));
  double best_nu = -1.0;
  const Point* best = nullptr;
  for (const Point& p : e.points) {
    if (distance(p, pivot) <= 1e-12) continue;
    double phi_p = wrap_angle_pi(std::atan2(p.y() - pivot.y(), p.x() - pivot.x()));
    double nu = (sense == RotationSense::clockwise)
                    ? wrap_angle_pi(phi - phi_p)
                    : wrap_angle_pi(phi_p - phi);
    bool better = false;
    if (best == nullptr || nu < best_nu - 1e-12) {
      better = true;
    } else if (std::abs(nu - best_nu) <= 1e-12) {
      // Angular tie: lexicographically smallest second point.
      if (p.x() < best->x() - 1e-15 ||
          (std::abs(p.x() - best->x()) <= 1e-15 && p.y() < best->y())) {
        better = true;
      }
    }
    if (better) {
      best_nu = nu;
      best = &p;
    }
  }
  if (best == nullptr) {
    throw_error(ErrorCode::no_second_point,
                "rotate_to_limiting: no ideal point distinct from the pivot");
  }
  // Build the rotated line through pivot and the hit point exactly, so the
  // containment invariant holds to machine precision.
  Hyperplane rotated = line_through_points(pivot, *best);
  return RotationResult{std::move(rotated), best_nu, *best};
}

}  // namespace yolkkit
