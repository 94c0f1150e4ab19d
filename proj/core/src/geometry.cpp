#include "yolkkit/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace yolkkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_same_dim(int a, int b, const char* where) {
  if (a != b) {
    throw_error(ErrorCode::dimension_mismatch,
                std::string(where) + ": dimensions " + std::to_string(a) +
                    " and " + std::to_string(b) + " differ");
  }
}

}  // namespace

bool is_finite(const Point& p) {
  for (double c : p.coords) {
    if (!std::isfinite(c)) return false;
  }
  return true;
}

void validate_point(const Point& p) {
  if (p.dim() < 2) {
    throw_error(ErrorCode::invalid_parameter,
                "point dimension must be >= 2, got " + std::to_string(p.dim()));
  }
  if (!is_finite(p)) {
    throw_error(ErrorCode::invalid_parameter, "point has non-finite coordinate");
  }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double dot(const std::vector<double>& a, const Point& p) {
  return dot(a, p.coords);
}

double norm(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

double distance(const Point& p, const Point& q) {
  double s = 0.0;
  for (size_t i = 0; i < p.coords.size(); ++i) {
    double d = p.coords[i] - q.coords[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Direction make_direction(std::vector<double> v) {
  double n = norm(v);
  if (n <= kUnitNormTol) {
    throw_error(ErrorCode::zero_normal, "direction vector has zero norm");
  }
  for (double& c : v) c /= n;
  return Direction{std::move(v)};
}

Direction direction_from_angle(double theta) {
  return Direction{{std::cos(theta), std::sin(theta)}};
}

Hyperplane normalize_hyperplane(std::vector<double> a, double b) {
  double n = norm(a);
  if (n <= kUnitNormTol) {
    throw_error(ErrorCode::zero_normal, "hyperplane normal has zero norm");
  }
  for (double& c : a) c /= n;
  b /= n;
  // Canonical sign: first nonzero normal coordinate positive. After
  // normalization some coordinate is at least 1/sqrt(k), so this is stable.
  for (double c : a) {
    if (std::abs(c) > kUnitNormTol) {
      if (c < 0.0) {
        for (double& d : a) d = -d;
        b = -b;
      }
      break;
    }
  }
  return Hyperplane{std::move(a), b};
}

double signed_offset(const Hyperplane& h, const Point& p) {
  require_same_dim(h.dim(), p.dim(), "signed_offset");
  return dot(h.normal, p) - h.offset;
}

double point_hyperplane_distance(const Point& p, const Hyperplane& h) {
  return std::abs(signed_offset(h, p));
}

Hyperplane flip(const Hyperplane& h) {
  Hyperplane out = h;
  for (double& c : out.normal) c = -c;
  out.offset = -out.offset;
  return out;
}

bool same_hyperplane(const Hyperplane& a, const Hyperplane& b, double tol) {
  if (a.dim() != b.dim()) return false;
  bool plus = true, minus = true;
  for (int i = 0; i < a.dim(); ++i) {
    if (std::abs(a.normal[i] - b.normal[i]) > tol) plus = false;
    if (std::abs(a.normal[i] + b.normal[i]) > tol) minus = false;
  }
  if (plus && std::abs(a.offset - b.offset) <= tol) return true;
  if (minus && std::abs(a.offset + b.offset) <= tol) return true;
  return false;
}

Hyperplane line_through_points(const Point& p, const Point& q) {
  if (p.dim() != 2 || q.dim() != 2) {
    throw_error(ErrorCode::unsupported_dimension,
                "line_through_points requires k = 2");
  }
  double dx = q.x() - p.x();
  double dy = q.y() - p.y();
  if (std::max(std::abs(dx), std::abs(dy)) <= 1e-12) {
    throw_error(ErrorCode::coincident_points,
                "line_through_points: points coincide");
  }
  // Normal is perpendicular to q - p; offset places p (and hence q) on it.
  Hyperplane h = normalize_hyperplane({-dy, dx}, 0.0);
  h.offset = dot(h.normal, p);
  return h;
}

Hyperplane rotate_line_about_point(const Hyperplane& h, const Point& pivot,
                                   double theta, RotationSense sense) {
  if (h.dim() != 2) {
    throw_error(ErrorCode::unsupported_dimension,
                "rotate_line_about_point requires k = 2");
  }
  if (point_hyperplane_distance(pivot, h) > kOnPlaneTol) {
    throw_error(ErrorCode::pivot_not_on_hyperplane,
                "rotate_line_about_point: pivot is not on the line");
  }
  double t = (sense == RotationSense::counter_clockwise) ? theta : -theta;
  double c = std::cos(t), s = std::sin(t);
  std::vector<double> a{c * h.normal[0] - s * h.normal[1],
                        s * h.normal[0] + c * h.normal[1]};
  double b = a[0] * pivot.x() + a[1] * pivot.y();
  return Hyperplane{std::move(a), b};
}

Ball make_ball(Point center, double radius) {
  validate_point(center);
  if (!(radius >= 0.0)) {
    throw_error(ErrorCode::invalid_parameter,
                "ball radius must be non-negative");
  }
  return Ball{std::move(center), radius};
}

Hyperplane tangent_hyperplane(const Ball& b, const Direction& alpha) {
  require_same_dim(b.center.dim(), alpha.dim(), "tangent_hyperplane");
  return Hyperplane{alpha.unit, dot(alpha.unit, b.center) + b.radius};
}

double wrap_angle_pi(double theta) {
  double t = std::fmod(theta, kPi);
  if (t < 0.0) t += kPi;
  if (t >= kPi) t = 0.0;  // fmod roundoff
  return t;
}

double wrap_angle_2pi(double theta) {
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  if (t >= 2.0 * kPi) t = 0.0;
  return t;
}

}  // namespace yolkkit
