#pragma once

#include <vector>

#include "yolkkit/lp_yolk.hpp"
#include "yolkkit/median.hpp"

namespace yolkkit {

/// Value of f(c) = max over median hyperplanes of dist(c, H), together with
/// the achieving direction and its median slab.
struct SweepEvaluation {
  double value = 0.0;
  Direction argmax_direction;
  MedianSlab argmax_slab;
};

/// Exact evaluation of f(c) for a planar electorate via an angular sweep:
/// critical angles are the directions where two projections tie; between
/// them the slab indices are fixed and the per-arc maximum is attained at an
/// endpoint or at the peak of |cos|.
SweepEvaluation max_median_distance(const Point& c, const Electorate& e);

struct YolkOptions {
  double tol = 1e-6;      // tangent/certificate tolerance
  int max_iter = 100000;  // cap on f evaluations
};

struct YolkResult {
  Ball ball;
  /// Outward normals of the median hyperplanes tangent to the yolk
  /// (achieving f within `tol` of the optimum).
  std::vector<Direction> tangent_directions;
  int iterations = 0;  // f evaluations spent
  bool certified = false;
};

/// Thrown when the descent exhausts its iteration budget without a passing
/// hemisphere certificate; carries the best iterate found.
class ConvergenceError : public Error {
 public:
  ConvergenceError(YolkResult best, const std::string& what)
      : Error(ErrorCode::convergence_failure, what), best_(std::move(best)) {}

  const YolkResult& best() const { return best_; }

 private:
  YolkResult best_;
};

/// The yolk of a planar electorate: the smallest ball intersecting every
/// median hyperplane. Minimizes the convex max-distance function by
/// subgradient descent with golden-section line searches, and terminates on
/// the hemisphere-cover certificate.
YolkResult yolk(const Electorate& e, const YolkOptions& opts = {});

struct GridSpec {
  int cells_per_axis = 16;
  int refinements = 4;
  double padding = 0.1;
};

/// Verification oracle: minimizes the sampled-direction max distance over a
/// multi-resolution grid. Requires n_dirs >= 1000.
Ball brute_force_yolk(const Electorate& e, int n_dirs,
                      const GridSpec& grid = {});

}  // namespace yolkkit
