#pragma once

#include <array>
#include <vector>

#include "yolkkit/geometry.hpp"
#include "yolkkit/median.hpp"
#include "yolkkit/yolk.hpp"

namespace yolkkit {

/// Hemisphere-cover certificate: a ball is a smallest ball intersecting a
/// compact hyperplane family iff every hemisphere has a tangent member. In
/// the plane this reduces to the outward tangent normals having no circular
/// gap larger than pi.
struct CoverCertificate {
  std::vector<Direction> tangent_directions;
  double max_gap = 0.0;  // radians
  bool covered = false;
};

/// Each hyperplane must be tangent to B within 1e-7 (else not_tangent).
CoverCertificate hemisphere_cover(const Ball& b,
                                  const std::vector<Hyperplane>& tangents);

/// A sub-family of at most k+1 = 3 tangents whose normals alone keep the
/// circular gap at or below pi. Pairs are searched before triples; the
/// lexicographically first valid subset wins.
struct SupportSet {
  std::vector<Hyperplane> hyperplanes;
};

SupportSet minimal_support(const Ball& b,
                           const std::vector<Hyperplane>& tangents);

/// Bisector of the angular region of H1/H2 that contains region_point: the
/// locus of equal signed distance. Parallel inputs yield the equidistant
/// midline.
Hyperplane angle_bisector(const Hyperplane& h1, const Hyperplane& h2,
                          const Point& region_point);

/// Incircle of the bounded triangle formed by three pairwise non-parallel,
/// non-concurrent lines; degenerate configurations are delegated to
/// solve_minimax_lines.
Ball inscribed_ball_three_lines(const Hyperplane& h1, const Hyperplane& h2,
                                const Hyperplane& h3);

/// Canonical three-tangent configuration angles. eta in [-pi/2, 0),
/// alpha in [pi/2, pi/2 - eta], beta in [pi/2, pi], gamma in [0, pi - beta),
/// delta in [0, pi - beta - gamma), nu = pi/2 + eta.
struct MainHalfParams {
  double alpha = 0.0;
  double beta = 0.0;
  double eta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double nu = 0.0;
};

MainHalfParams make_mainhalf_params(double alpha, double beta, double eta,
                                    double gamma, double delta);
bool mainhalf_params_valid(const MainHalfParams& p, double tol = 1e-9);

/// Closed-form radius of the smallest ball intersecting the three rotated
/// tangent lines of the canonical configuration. Always at least 1/2.
double mainhalf_radius(const MainHalfParams& p);

/// Lower bound f(beta) obtained by dropping the middle numerator term;
/// non-increasing in beta and still at least 1/2.
double mainhalf_lower_bound(const MainHalfParams& p);

/// The three limiting lines of the canonical configuration, in the order
/// H1(delta), H2(gamma), H3(nu). H3(nu) is the horizontal line y = sin(eta).
std::array<Hyperplane, 3> mainhalf_limiting_lines(const MainHalfParams& p);

/// Similarity map x -> rot * (x - shift) / scale used to normalize a yolk to
/// the unit ball.
struct SimilarityTransform {
  Point shift{0.0, 0.0};
  double scale = 1.0;
  double rot = 0.0;  // radians, counter-clockwise

  Point apply(const Point& p) const;
};

struct CanonicalConfig {
  SimilarityTransform transform;
  /// eta, alpha, beta, nu always set; gamma/delta are NaN when the
  /// corresponding rotations could not be derived.
  MainHalfParams params;
  Point p1{0.0, 0.0}, p2{0.0, 0.0}, p3{0.0, 0.0};  // tangent points, unit ball
  int valid_labelings = 0;  // how many clockwise labelings satisfied the ranges
};

/// Normalizes a certified yolk with at least three tangent directions to the
/// canonical configuration: unit yolk, tangent points labeled clockwise with
/// the two large slices as beta then alpha, and the rotated third tangent
/// parallel to the x-axis.
CanonicalConfig canonicalize(const Electorate& e, const YolkResult& y);

}  // namespace yolkkit
