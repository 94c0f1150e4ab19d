#include "yolkkit/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "yolkkit/rng.hpp"

namespace yolkkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool cond, const std::string& msg) {
  if (!cond) throw_error(ErrorCode::invalid_parameter, msg);
}

double oddr2ok_lp_radius(double alpha, double w) {
  double ca = std::cos(alpha);
  return std::tan(alpha / 2.0) * (w * ca - 1.0) / ((2.0 * w - 1.0) * ca - 1.0);
}

double oddr2ok_lp_center_x(double alpha, double w) {
  double ca = std::cos(alpha);
  return (2.0 - w * (1.0 + ca)) / (1.0 - (2.0 * w - 1.0) * ca);
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::nondegen:
      return "nondegen";
    case Family::oddr2ok:
      return "oddr2ok";
    case Family::lift:
      return "lift";
    case Family::oddr2far:
      return "oddr2far";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  if (name == "nondegen") return Family::nondegen;
  if (name == "oddr2ok") return Family::oddr2ok;
  if (name == "lift") return Family::lift;
  if (name == "oddr2far") return Family::oddr2far;
  throw_error(ErrorCode::invalid_parameter, "unknown family '" + name + "'");
}

FamilyInstance family_nondegen(double eps) {
  require(eps > 0.0, "nondegen: eps must be positive");
  std::vector<Point> pts{{2.0, eps},  {2.0, -eps},  {-2.0, eps},
                         {-2.0, -eps}, {1.0, 0.0},  {-1.0, 0.0}};
  FamilyInstance out;
  out.family = Family::nondegen;
  out.electorate = Electorate::from_points(std::move(pts));
  out.parameters["eps"] = eps;
  out.expected["lp_radius"] = eps / std::sqrt(1.0 + eps * eps);
  out.expected["lp_center_x"] = 0.0;
  out.expected["lp_center_y"] = 0.0;
  out.expected["yolk_radius"] = 1.0;
  out.expected["limiting_count"] = 11.0;
  return out;
}

FamilyInstance family_oddr2ok(double alpha, double w, double eps) {
  require(alpha > kPi / 2.0 + 1e-9 && alpha < kPi - 1e-9,
          "oddr2ok: alpha must lie strictly inside (pi/2, pi)");
  require(w > 1.0 + 1e-12, "oddr2ok: w must exceed 1");
  double ca = std::cos(alpha), sa = std::sin(alpha);
  double eps_cap = 1e-3 * (1.0 / std::abs(ca) - 1.0);
  require(eps > 0.0 && eps <= eps_cap,
          "oddr2ok: eps must lie in (0, 1e-3*(1/|cos alpha| - 1)]");

  std::vector<Point> pts{
      {1.0, 0.0},
      {w, (1.0 - ca * w) / sa},
      {w, -(1.0 - ca * w) / sa},
      {1.0 / ca - eps, eps * ca / sa},
      {1.0 / ca - eps, -eps * ca / sa},
  };
  FamilyInstance out;
  out.family = Family::oddr2ok;
  out.electorate = Electorate::from_points(std::move(pts));
  out.parameters["alpha"] = alpha;
  out.parameters["w"] = w;
  out.parameters["eps"] = eps;
  out.expected["yolk_radius"] = 1.0;
  out.expected["yolk_center_x"] = 0.0;
  out.expected["yolk_center_y"] = 0.0;
  out.expected["lp_radius"] = oddr2ok_lp_radius(alpha, w);
  out.expected["lp_center_x"] = oddr2ok_lp_center_x(alpha, w);
  out.expected["lp_center_y"] = 0.0;
  out.expected["limiting_count"] = 6.0;
  return out;
}

FamilyInstance family_oddr2ok_kappa(double alpha, double kappa, double eps) {
  require(kappa > 0.0, "oddr2ok: kappa must be positive");
  double w = -kappa / std::cos(alpha);
  FamilyInstance out = family_oddr2ok(alpha, w, eps);
  out.parameters["kappa"] = kappa;
  out.expected["ratio_limit"] = (kappa + 1.0) / (2.0 * kappa + 1.0);
  return out;
}

FamilyInstance family_lift(const Electorate& base, double noise,
                           uint64_t seed) {
  require(base.dim == 2, "lift: base electorate must be planar");
  require(noise >= 0.0, "lift: noise must be non-negative");
  std::vector<Point> pts;
  pts.reserve(base.points.size());
  for (size_t i = 0; i < base.points.size(); ++i) {
    double z = 0.0;
    if (noise > 0.0) {
      SplitMix64 g(SplitMix64::stream_seed(seed, i));
      z = g.uniform(-noise, noise);
    }
    pts.emplace_back(base.points[i].x(), base.points[i].y(), z);
  }
  FamilyInstance out;
  out.family = Family::lift;
  out.electorate = Electorate::from_points(std::move(pts));
  out.parameters["noise"] = noise;
  out.parameters["seed"] = static_cast<double>(seed);
  if (noise == 0.0) out.expected["lp_radius"] = 0.0;
  return out;
}

FamilyInstance family_oddr2far(double alpha, double kappa, double eps) {
  FamilyInstance out = family_oddr2ok_kappa(alpha, kappa, eps);
  out.family = Family::oddr2far;
  double ca = std::cos(alpha);
  double w = -kappa / ca;
  double r = oddr2ok_lp_radius(alpha, w);
  double apex_dist = std::abs(1.0 / ca);
  out.expected["apex_x"] = 1.0 / ca;
  out.expected["apex_distance"] = apex_dist;
  // Similar triangles: the LP ball tangent to both cone sides sits at
  // distance r * d' from the apex, the yolk at d', so the centers are
  // (1 - r) * d' apart.
  out.expected["predicted_separation"] = (1.0 - r) * apex_dist;
  return out;
}

std::vector<Hyperplane> enumerate_limiting_median_planes3(const Electorate& e) {
  if (e.dim != 3) {
    throw_error(ErrorCode::unsupported_dimension,
                "enumerate_limiting_median_planes3 requires k = 3");
  }
  const int n = e.size();
  std::vector<Hyperplane> planes;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int l = j + 1; l < n; ++l) {
        const Point& p = e.points[static_cast<size_t>(i)];
        const Point& q = e.points[static_cast<size_t>(j)];
        const Point& s = e.points[static_cast<size_t>(l)];
        double ux = q[0] - p[0], uy = q[1] - p[1], uz = q[2] - p[2];
        double vx = s[0] - p[0], vy = s[1] - p[1], vz = s[2] - p[2];
        std::vector<double> nrm{uy * vz - uz * vy, uz * vx - ux * vz,
                                ux * vy - uy * vx};
        if (norm(nrm) <= 1e-12) continue;  // collinear triple, no unique plane
        Hyperplane h = normalize_hyperplane(std::move(nrm), 0.0);
        h.offset = dot(h.normal, p);
        if (!is_median(h, e)) continue;
        bool dup = false;
        for (const Hyperplane& seen : planes) {
          if (same_hyperplane(seen, h, 1e-9)) {
            dup = true;
            break;
          }
        }
        if (!dup) planes.push_back(std::move(h));
      }
    }
  }
  return planes;
}

}  // namespace yolkkit
