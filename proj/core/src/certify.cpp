#include "yolkkit/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "yolkkit/minimax_lp.hpp"

namespace yolkkit {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGapSlack = 1e-9;

std::vector<double> outward_angles(const Ball& b,
                                   const std::vector<Hyperplane>& tangents) {
  std::vector<double> psi;
  psi.reserve(tangents.size());
  for (const Hyperplane& h : tangents) {
    double d = point_hyperplane_distance(b.center, h);
    if (std::abs(d - b.radius) >= 1e-7) {
      throw_error(ErrorCode::not_tangent,
                  "hemisphere_cover: hyperplane is not tangent to the ball");
    }
    double s = signed_offset(h, b.center);
    double theta = std::atan2(h.normal[1], h.normal[0]);
    if (b.radius <= 1e-12) {
      // Point ball: both orientations touch it.
      psi.push_back(wrap_angle_2pi(theta));
      psi.push_back(wrap_angle_2pi(theta + kPi));
    } else {
      // a.c = b - r means the outward normal is +a; a.c = b + r flips it.
      psi.push_back(wrap_angle_2pi(s > 0.0 ? theta + kPi : theta));
    }
  }
  std::sort(psi.begin(), psi.end());
  return psi;
}

double circular_gap(const std::vector<double>& sorted) {
  if (sorted.empty()) return 2.0 * kPi;
  double gap = sorted.front() + 2.0 * kPi - sorted.back();
  for (size_t i = 1; i < sorted.size(); ++i) {
    gap = std::max(gap, sorted[i] - sorted[i - 1]);
  }
  return gap;
}

Point intersect_lines(const Hyperplane& h1, const Hyperplane& h2) {
  double det = h1.normal[0] * h2.normal[1] - h1.normal[1] * h2.normal[0];
  if (std::abs(det) <= 1e-12) {
    throw_error(ErrorCode::invalid_params, "lines are parallel");
  }
  double x = (h1.offset * h2.normal[1] - h2.offset * h1.normal[1]) / det;
  double y = (h1.normal[0] * h2.offset - h2.normal[0] * h1.offset) / det;
  return Point(x, y);
}

bool nearly_nan(double v) { return std::isnan(v); }

}  // namespace

CoverCertificate hemisphere_cover(const Ball& b,
                                  const std::vector<Hyperplane>& tangents) {
  if (b.center.dim() != 2) {
    throw_error(ErrorCode::unsupported_dimension,
                "hemisphere_cover requires k = 2");
  }
  std::vector<double> psi = outward_angles(b, tangents);
  CoverCertificate cert;
  cert.max_gap = circular_gap(psi);
  cert.covered = cert.max_gap <= kPi + kGapSlack;
  cert.tangent_directions.reserve(psi.size());
  for (double a : psi) cert.tangent_directions.push_back(direction_from_angle(a));
  return cert;
}

SupportSet minimal_support(const Ball& b,
                           const std::vector<Hyperplane>& tangents) {
  std::vector<double> psi_all = outward_angles(b, tangents);
  if (circular_gap(psi_all) > kPi + kGapSlack) {
    throw_error(ErrorCode::no_cover,
                "minimal_support: tangent family does not cover the ball");
  }
  // Unsorted per-input angles for subset tests.
  std::vector<double> psi(tangents.size());
  for (size_t i = 0; i < tangents.size(); ++i) {
    double s = signed_offset(tangents[i], b.center);
    double theta = std::atan2(tangents[i].normal[1], tangents[i].normal[0]);
    psi[i] = wrap_angle_2pi(s > 0.0 ? theta + kPi : theta);
  }

  auto covered_subset = [&](std::vector<double> sub) {
    std::sort(sub.begin(), sub.end());
    return circular_gap(sub) <= kPi + kGapSlack;
  };

  const size_t m = tangents.size();
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      if (covered_subset({psi[i], psi[j]})) {
        return SupportSet{{tangents[i], tangents[j]}};
      }
    }
  }
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      for (size_t l = j + 1; l < m; ++l) {
        if (covered_subset({psi[i], psi[j], psi[l]})) {
          return SupportSet{{tangents[i], tangents[j], tangents[l]}};
        }
      }
    }
  }
  // A covered family always contains a covered subset of size <= 3; reaching
  // this means the tolerance bookkeeping above is inconsistent.
  throw_error(ErrorCode::no_cover,
              "minimal_support: no covering subset of size <= 3 found");
}

Hyperplane angle_bisector(const Hyperplane& h1, const Hyperplane& h2,
                          const Point& region_point) {
  if (h1.dim() != 2 || h2.dim() != 2) {
    throw_error(ErrorCode::unsupported_dimension,
                "angle_bisector requires k = 2");
  }
  if (same_hyperplane(h1, h2)) {
    throw_error(ErrorCode::invalid_params,
                "angle_bisector: lines are sign-equivalent");
  }
  double s1 = signed_offset(h1, region_point);
  double s2 = signed_offset(h2, region_point);
  if (std::abs(s1) <= 1e-12 || std::abs(s2) <= 1e-12) {
    throw_error(ErrorCode::invalid_params,
                "angle_bisector: region point lies on a line");
  }
  double g1 = s1 > 0.0 ? 1.0 : -1.0;
  double g2 = s2 > 0.0 ? 1.0 : -1.0;
  std::vector<double> n{g1 * h1.normal[0] - g2 * h2.normal[0],
                        g1 * h1.normal[1] - g2 * h2.normal[1]};
  double off = g1 * h1.offset - g2 * h2.offset;
  if (norm(n) <= 1e-9) {
    // Parallel lines: the equidistant locus is the midline.
    double sigma = dot(h1.normal, h2.normal) >= 0.0 ? 1.0 : -1.0;
    return normalize_hyperplane(h1.normal, 0.5 * (h1.offset + sigma * h2.offset));
  }
  return normalize_hyperplane(std::move(n), off);
}

Ball inscribed_ball_three_lines(const Hyperplane& h1, const Hyperplane& h2,
                                const Hyperplane& h3) {
  const Hyperplane* hs[3] = {&h1, &h2, &h3};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      double cross = hs[i]->normal[0] * hs[j]->normal[1] -
                     hs[i]->normal[1] * hs[j]->normal[0];
      if (std::abs(cross) <= 1e-9) {
        return solve_minimax_lines({h1, h2, h3}, 2);  // parallel pair
      }
    }
  }
  Point v12 = intersect_lines(h1, h2);
  Point v13 = intersect_lines(h1, h3);
  Point v23 = intersect_lines(h2, h3);
  double side = std::max({distance(v12, v13), distance(v12, v23),
                          distance(v13, v23)});
  if (side <= 1e-9) {
    return solve_minimax_lines({h1, h2, h3}, 2);  // concurrent lines
  }
  Point g(
      (v12.x() + v13.x() + v23.x()) / 3.0,
      (v12.y() + v13.y() + v23.y()) / 3.0);
  Hyperplane bis_a = angle_bisector(h1, h2, g);
  Hyperplane bis_b = angle_bisector(h1, h3, g);
  Point center = intersect_lines(bis_a, bis_b);
  double r = (point_hyperplane_distance(center, h1) +
              point_hyperplane_distance(center, h2) +
              point_hyperplane_distance(center, h3)) /
             3.0;
  return Ball{center, r};
}

MainHalfParams make_mainhalf_params(double alpha, double beta, double eta,
                                    double gamma, double delta) {
  MainHalfParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.eta = eta;
  p.gamma = gamma;
  p.delta = delta;
  p.nu = kPi / 2.0 + eta;
  return p;
}

bool mainhalf_params_valid(const MainHalfParams& p, double tol) {
  if (!(p.eta >= -kPi / 2.0 - tol && p.eta < 0.0 + tol)) return false;
  if (!(p.alpha >= kPi / 2.0 - tol && p.alpha <= kPi / 2.0 - p.eta + tol)) {
    return false;
  }
  if (!(p.beta >= kPi / 2.0 - tol && p.beta <= kPi + tol)) return false;
  if (!(p.gamma >= -tol && p.gamma < kPi - p.beta + tol)) return false;
  if (!(p.delta >= -tol && p.delta < kPi - p.beta - p.gamma + tol)) return false;
  if (std::abs(p.nu - (kPi / 2.0 + p.eta)) > 1e-9) return false;
  return true;
}

double mainhalf_radius(const MainHalfParams& p) {
  if (!mainhalf_params_valid(p)) {
    throw_error(ErrorCode::invalid_params,
                "mainhalf_radius: parameters out of range");
  }
  double A = p.alpha + p.eta;
  double num = std::cos(A - p.gamma) * std::cos(p.delta) -
               std::sin(p.beta + p.delta + p.gamma) * std::sin(p.eta) -
               std::cos(A + p.beta + p.delta) * std::cos(p.gamma);
  double den = std::sin(p.beta + p.delta + p.gamma) + std::cos(A - p.gamma) -
               std::cos(A + p.beta + p.delta);
  if (std::abs(den) < 1e-12) {
    throw_error(ErrorCode::degenerate_denominator,
                "mainhalf_radius: vanishing denominator");
  }
  return num / den;
}

double mainhalf_lower_bound(const MainHalfParams& p) {
  if (!mainhalf_params_valid(p)) {
    throw_error(ErrorCode::invalid_params,
                "mainhalf_lower_bound: parameters out of range");
  }
  double A = p.alpha + p.eta;
  double num = std::cos(A - p.gamma) * std::cos(p.delta) -
               std::cos(A + p.beta + p.delta) * std::cos(p.gamma);
  double den = std::sin(p.beta + p.delta + p.gamma) + std::cos(A - p.gamma) -
               std::cos(A + p.beta + p.delta);
  if (std::abs(den) < 1e-12) {
    throw_error(ErrorCode::degenerate_denominator,
                "mainhalf_lower_bound: vanishing denominator");
  }
  return num / den;
}

std::array<Hyperplane, 3> mainhalf_limiting_lines(const MainHalfParams& p) {
  if (!mainhalf_params_valid(p)) {
    throw_error(ErrorCode::invalid_params,
                "mainhalf_limiting_lines: parameters out of range");
  }
  double A = p.alpha + p.eta;
  // H1(delta): through p1 = (cos(A+beta), sin(A+beta)), normal angle
  // A+beta+delta (tangent normal rotated counter-clockwise by delta).
  double psi1 = A + p.beta + p.delta;
  std::vector<double> a1{std::cos(psi1), std::sin(psi1)};
  double b1 = a1[0] * std::cos(A + p.beta) + a1[1] * std::sin(A + p.beta);
  // H2(gamma): through p2 = (cos A, sin A), normal angle A - gamma.
  double psi2 = A - p.gamma;
  std::vector<double> a2{std::cos(psi2), std::sin(psi2)};
  double b2 = a2[0] * std::cos(A) + a2[1] * std::sin(A);
  // H3(nu): horizontal line y = sin(eta).
  std::vector<double> a3{0.0, 1.0};
  double b3 = std::sin(p.eta);
  return {Hyperplane{std::move(a1), b1}, Hyperplane{std::move(a2), b2},
          Hyperplane{std::move(a3), b3}};
}

Point SimilarityTransform::apply(const Point& p) const {
  double x = (p.x() - shift.x()) / scale;
  double y = (p.y() - shift.y()) / scale;
  double c = std::cos(rot), s = std::sin(rot);
  return Point(c * x - s * y, s * x + c * y);
}

CanonicalConfig canonicalize(const Electorate& e, const YolkResult& y) {
  if (e.dim != 2) {
    throw_error(ErrorCode::unsupported_dimension,
                "canonicalize requires k = 2");
  }
  if (e.size() % 2 == 0) {
    throw_error(ErrorCode::invalid_parameter,
                "canonicalize requires an odd electorate");
  }
  if (!y.certified || y.ball.radius <= 1e-12) {
    throw_error(ErrorCode::insufficient_tangents,
                "canonicalize requires a certified yolk with positive radius");
  }
  if (y.tangent_directions.size() < 3) {
    throw_error(ErrorCode::insufficient_tangents,
                "canonicalize requires at least 3 tangent directions");
  }

  std::vector<Hyperplane> tangents;
  tangents.reserve(y.tangent_directions.size());
  for (const Direction& d : y.tangent_directions) {
    tangents.push_back(tangent_hyperplane(y.ball, d));
  }
  SupportSet support = minimal_support(y.ball, tangents);
  if (support.hyperplanes.size() < 3) {
    throw_error(ErrorCode::insufficient_tangents,
                "canonicalize: support set has fewer than 3 tangents");
  }

  // Outward angles of the three support tangents (they were built from
  // outward directions, so the normal itself points outward).
  std::array<double, 3> psi{};
  for (int i = 0; i < 3; ++i) {
    psi[static_cast<size_t>(i)] = wrap_angle_2pi(
        std::atan2(support.hyperplanes[static_cast<size_t>(i)].normal[1],
                   support.hyperplanes[static_cast<size_t>(i)].normal[0]));
  }
  std::sort(psi.begin(), psi.end());

  const Point& c0 = y.ball.center;
  const double r0 = y.ball.radius;

  // Try each clockwise labeling (p1, p2, p3); require beta, alpha >= pi/2
  // and the rotation angle nu < pi - alpha.
  struct Candidate {
    double a1 = 0.0, a2 = 0.0, a3 = 0.0;  // angles of p1, p2, p3
    double alpha = 0.0, beta = 0.0, nu = 0.0;
    Hyperplane rotated;
    Point pivot;
    bool ok = false;
  };
  Candidate chosen;
  int valid = 0;
  for (int s = 0; s < 3; ++s) {
    // Clockwise order means descending angles; labeling (p1, p2, p3) =
    // (psi[(s+2)%3] + wraps, ...). Walk the sorted angles downward.
    double a1 = psi[static_cast<size_t>((s + 2) % 3)];
    double a2 = psi[static_cast<size_t>((s + 1) % 3)];
    double a3 = psi[static_cast<size_t>(s)];
    double beta = wrap_angle_2pi(a1 - a2);
    double alpha = wrap_angle_2pi(a2 - a3);
    if (beta < kPi / 2.0 - 1e-9 || alpha < kPi / 2.0 - 1e-9) continue;
    if (beta > kPi + 1e-9 || alpha > kPi + 1e-9) continue;

    // Rotate H3 (tangent at p3) clockwise to its limiting position.
    Point t3(c0.x() + r0 * std::cos(a3), c0.y() + r0 * std::sin(a3));
    Hyperplane h3 = tangent_hyperplane(y.ball, direction_from_angle(a3));
    // Pivot must be an ideal point; when H3 is non-limiting the tangency
    // point itself is one (lem about non-limiting tangents).
    Point pivot = t3;
    double best_d = std::numeric_limits<double>::infinity();
    for (const Point& p : e.points) {
      if (point_hyperplane_distance(p, h3) > 1e-5 * std::max(1.0, r0)) continue;
      double d = distance(p, t3);
      if (d < best_d) {
        best_d = d;
        pivot = p;
      }
    }
    // Snap the pivot onto the line to keep rotate_to_limiting's precondition.
    double off = signed_offset(h3, pivot);
    Point snapped(pivot.x() - off * h3.normal[0], pivot.y() - off * h3.normal[1]);

    RotationResult rot;
    try {
      rot = rotate_to_limiting(h3, snapped, e, RotationSense::clockwise);
    } catch (const Error&) {
      continue;
    }
    if (rot.angle >= kPi - alpha + 1e-9) continue;

    ++valid;
    if (!chosen.ok) {
      chosen = Candidate{a1, a2, a3, alpha, beta,
                         rot.angle, rot.hyperplane, snapped, true};
    }
  }
  if (!chosen.ok) {
    throw_error(ErrorCode::insufficient_tangents,
                "canonicalize: no labeling satisfies the range constraints");
  }

  double nu = chosen.nu;
  double eta = nu - kPi / 2.0;  // p3 sits at angle eta after the rotation
  double rho = eta - chosen.a3;

  CanonicalConfig out;
  out.transform = SimilarityTransform{c0, r0, rho};
  out.params = make_mainhalf_params(chosen.alpha, chosen.beta, eta,
                                    std::numeric_limits<double>::quiet_NaN(),
                                    std::numeric_limits<double>::quiet_NaN());
  out.params.nu = nu;
  out.valid_labelings = valid;
  out.p1 = Point(std::cos(eta + chosen.alpha + chosen.beta),
                 std::sin(eta + chosen.alpha + chosen.beta));
  out.p2 = Point(std::cos(eta + chosen.alpha), std::sin(eta + chosen.alpha));
  out.p3 = Point(std::cos(eta), std::sin(eta));

  // Best-effort gamma and delta: rotate H2 clockwise and H1 counter-
  // clockwise about their tangent points to the nearest limiting position.
  auto try_rotation = [&](double angle_on_circle, RotationSense sense,
                          double limit) -> double {
    Point tp(c0.x() + r0 * std::cos(angle_on_circle),
             c0.y() + r0 * std::sin(angle_on_circle));
    Hyperplane h = tangent_hyperplane(y.ball, direction_from_angle(angle_on_circle));
    Point pivot = tp;
    double best_d = std::numeric_limits<double>::infinity();
    for (const Point& p : e.points) {
      if (point_hyperplane_distance(p, h) > 1e-5 * std::max(1.0, r0)) continue;
      double d = distance(p, tp);
      if (d < best_d) {
        best_d = d;
        pivot = p;
      }
    }
    double off = signed_offset(h, pivot);
    Point snapped(pivot.x() - off * h.normal[0], pivot.y() - off * h.normal[1]);
    try {
      RotationResult rr = rotate_to_limiting(h, snapped, e, sense);
      if (rr.angle < limit + 1e-9) return rr.angle;
    } catch (const Error&) {
    }
    return std::numeric_limits<double>::quiet_NaN();
  };
  out.params.gamma =
      try_rotation(chosen.a2, RotationSense::clockwise, kPi - chosen.beta);
  if (!nearly_nan(out.params.gamma)) {
    out.params.delta =
        try_rotation(chosen.a1, RotationSense::counter_clockwise,
                     kPi - chosen.beta - out.params.gamma);
  }
  return out;
}

}  // namespace yolkkit
