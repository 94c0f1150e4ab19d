#pragma once

// Brute-force oracles kept independent of the implementation paths they
// check.

#include <algorithm>
#include <cmath>
#include <vector>

#include "yolkkit/median.hpp"

namespace yolkkit::testing {

/// Max distance from c to any median line, sampled over n_dirs directions
/// plus the projection-tie angles (the max can sit exactly on a tie, where
/// uniform sampling alone would miss it by O(pi/n_dirs)).
inline double dense_max_median_distance(const Point& c, const Electorate& e,
                                        int n_dirs) {
  constexpr double kPi = 3.14159265358979323846;
  std::vector<double> proj(e.points.size());
  double best = 0.0;
  auto eval_dir = [&](double theta) {
    double cs = std::cos(theta), sn = std::sin(theta);
    for (size_t i = 0; i < e.points.size(); ++i) {
      proj[i] = cs * e.points[i].x() + sn * e.points[i].y();
    }
    std::sort(proj.begin(), proj.end());
    size_t n = proj.size();
    double b_lo, b_hi;
    if (n % 2 == 1) {
      b_lo = b_hi = proj[n / 2];
    } else {
      b_lo = proj[n / 2 - 1];
      b_hi = proj[n / 2];
    }
    double t = cs * c.x() + sn * c.y();
    best = std::max(best, std::max(std::abs(t - b_lo), std::abs(t - b_hi)));
  };
  for (int j = 0; j < n_dirs; ++j) {
    eval_dir(kPi * static_cast<double>(j) / n_dirs);
  }
  for (size_t i = 0; i < e.points.size(); ++i) {
    for (size_t j = i + 1; j < e.points.size(); ++j) {
      double dx = e.points[i].x() - e.points[j].x();
      double dy = e.points[i].y() - e.points[j].y();
      if (std::abs(dx) <= 1e-14 && std::abs(dy) <= 1e-14) continue;
      eval_dir(wrap_angle_pi(std::atan2(dy, dx) + kPi / 2.0));
    }
  }
  return best;
}

/// Classical incircle of the triangle with vertices A, B, C:
/// center = (a*A + b*B + c*C) / (a+b+c), radius = area / s.
inline Ball incircle_of_triangle(const Point& A, const Point& B,
                                 const Point& C) {
  double a = distance(B, C), b = distance(A, C), c = distance(A, B);
  double p = a + b + c;
  double cx = (a * A.x() + b * B.x() + c * C.x()) / p;
  double cy = (a * A.y() + b * B.y() + c * C.y()) / p;
  double cross = (B.x() - A.x()) * (C.y() - A.y()) -
                 (B.y() - A.y()) * (C.x() - A.x());
  double r = std::abs(cross) / p;
  return Ball{Point(cx, cy), r};
}

/// Brute-force limiting median lines: every pair, median test, dedup.
inline std::vector<Hyperplane> brute_limiting_lines(const Electorate& e) {
  std::vector<Hyperplane> out;
  for (int i = 0; i < e.size(); ++i) {
    for (int j = i + 1; j < e.size(); ++j) {
      const Point& p = e.points[static_cast<size_t>(i)];
      const Point& q = e.points[static_cast<size_t>(j)];
      if (distance(p, q) <= 1e-12) continue;
      Hyperplane h = line_through_points(p, q);
      if (!is_median(h, e)) continue;
      bool dup = false;
      for (const Hyperplane& seen : out) {
        if (same_hyperplane(seen, h, 1e-9)) {
          dup = true;
          break;
        }
      }
      if (!dup) out.push_back(h);
    }
  }
  return out;
}

}  // namespace yolkkit::testing
