#pragma once

#include <cmath>
#include <vector>

#include "yolkkit/errors.hpp"

namespace yolkkit {

// Tolerances shared across the geometry stack.
inline constexpr double kUnitNormTol = 1e-12;  // ||a|| = 1 checks
inline constexpr double kOnPlaneTol = 1e-9;    // point-on-hyperplane checks

/// A point in R^k, k >= 2. Coordinates are plain policy-space units.
struct Point {
  std::vector<double> coords;

  Point() = default;
  Point(double x, double y) : coords{x, y} {}
  Point(double x, double y, double z) : coords{x, y, z} {}
  explicit Point(std::vector<double> c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  double operator[](int i) const { return coords[static_cast<size_t>(i)]; }
  double& operator[](int i) { return coords[static_cast<size_t>(i)]; }
  double x() const { return coords[0]; }
  double y() const { return coords[1]; }
};

bool is_finite(const Point& p);
void validate_point(const Point& p);
double dot(const std::vector<double>& a, const std::vector<double>& b);
double dot(const std::vector<double>& a, const Point& p);
double norm(const std::vector<double>& v);
double distance(const Point& p, const Point& q);

/// Unit direction vector; in the plane `angle()` gives its polar angle.
struct Direction {
  std::vector<double> unit;

  int dim() const { return static_cast<int>(unit.size()); }
  double angle() const { return std::atan2(unit[1], unit[0]); }
};

Direction make_direction(std::vector<double> v);
Direction direction_from_angle(double theta);

/// Hyperplane {x : a.x = b} with ||a|| = 1. (a, b) and (-a, -b) denote the
/// same hyperplane; `same_hyperplane` compares modulo that sign.
struct Hyperplane {
  std::vector<double> normal;
  double offset = 0.0;

  int dim() const { return static_cast<int>(normal.size()); }
};

/// Scales (a, b) to unit normal and fixes the sign so the first nonzero
/// normal coordinate is positive. Throws zero_normal when ||a|| = 0.
Hyperplane normalize_hyperplane(std::vector<double> a, double b);

/// a.p - b (signed); the distance is its absolute value.
double signed_offset(const Hyperplane& h, const Point& p);
double point_hyperplane_distance(const Point& p, const Hyperplane& h);

Hyperplane flip(const Hyperplane& h);
bool same_hyperplane(const Hyperplane& a, const Hyperplane& b,
                     double tol = kOnPlaneTol);

/// Line through two distinct points in the plane.
Hyperplane line_through_points(const Point& p, const Point& q);

enum class RotationSense { clockwise, counter_clockwise };

/// Rotates a planar line about a pivot that lies on it. The returned line
/// contains the pivot; its normal is the input normal rotated by theta.
Hyperplane rotate_line_about_point(const Hyperplane& h, const Point& pivot,
                                   double theta, RotationSense sense);

struct Ball {
  Point center;
  double radius = 0.0;
};

Ball make_ball(Point center, double radius);

/// Hyperplane tangent to B at c + r*alpha with outward normal alpha:
/// (alpha, alpha.c + r). Valid for r = 0 (plane through the point).
Hyperplane tangent_hyperplane(const Ball& b, const Direction& alpha);

/// Wraps an angle into [0, pi): line directions and normals are only
/// meaningful modulo pi.
double wrap_angle_pi(double theta);
/// Wraps into [0, 2*pi).
double wrap_angle_2pi(double theta);

}  // namespace yolkkit
