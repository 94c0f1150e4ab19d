#pragma once

// Exhaustive-basis reference solver for
//   min r  s.t.  -r <= a_i.c - b_i <= r,   c in R^k, k in {2, 3},
// independent of the incremental method in core. Every subset of tight
// sign-constraints of size <= k+1 is a candidate: its affine solution set
// either fixes r (candidate kept) or leaves r unbounded (skipped). The
// optimum's tight set always contains such a subset, and the minimum-norm
// point of the subset's affine hull is feasible for it, so scanning all
// subsets and keeping the best feasible candidate is exact.

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "yolkkit/geometry.hpp"

namespace yolkkit::testing {

struct LpReferenceResult {
  double radius = std::numeric_limits<double>::infinity();
  Eigen::VectorXd center;
};

inline LpReferenceResult lp_reference(const std::vector<Hyperplane>& lines,
                                      int k) {
  const int m = static_cast<int>(lines.size());
  const int d = k + 1;
  Eigen::MatrixXd A(2 * m, d);
  Eigen::VectorXd rhs(2 * m);
  Eigen::MatrixXd an(m, k);
  Eigen::VectorXd bn(m);
  for (int i = 0; i < m; ++i) {
    double nn = norm(lines[static_cast<size_t>(i)].normal);
    for (int j = 0; j < k; ++j) {
      an(i, j) = lines[static_cast<size_t>(i)].normal[static_cast<size_t>(j)] / nn;
    }
    bn(i) = lines[static_cast<size_t>(i)].offset / nn;
    for (int s = 0; s < 2; ++s) {
      double sg = s == 0 ? 1.0 : -1.0;
      for (int j = 0; j < k; ++j) A(2 * i + s, j) = sg * an(i, j);
      A(2 * i + s, k) = -1.0;
      rhs(2 * i + s) = sg * bn(i);
    }
  }

  double scale = 1.0 + bn.cwiseAbs().maxCoeff();
  auto feasible = [&](const Eigen::VectorXd& x) {
    double r = x(k);
    if (r < -1e-9 * scale) return false;
    for (int i = 0; i < m; ++i) {
      double dist = std::abs(an.row(i).dot(x.head(k)) - bn(i));
      if (dist > r + 1e-9 * scale) return false;
    }
    return true;
  };

  LpReferenceResult best;
  auto consider = [&](const Eigen::VectorXd& x) {
    if (!feasible(x)) return;
    double r = std::max(x(k), 0.0);
    double cn = x.head(k).squaredNorm();
    if (r < best.radius - 1e-12 * scale ||
        (std::abs(r - best.radius) <= 1e-12 * scale &&
         (best.center.size() == 0 || cn < best.center.squaredNorm() - 1e-12))) {
      best.radius = r;
      best.center = x.head(k);
    }
  };

  const int rows = 2 * m;
  std::vector<int> subset;
  // Iterate subsets of size t = 1..d via odometer indices.
  for (int t = 1; t <= d; ++t) {
    subset.assign(static_cast<size_t>(t), 0);
    for (int i = 0; i < t; ++i) subset[static_cast<size_t>(i)] = i;
    if (t > rows) break;
    while (true) {
      Eigen::MatrixXd U(t, d);
      Eigen::VectorXd v(t);
      for (int i = 0; i < t; ++i) {
        U.row(i) = A.row(subset[static_cast<size_t>(i)]);
        v(i) = rhs(subset[static_cast<size_t>(i)]);
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(U);
      lu.setThreshold(1e-10);
      if (lu.rank() == t) {
        Eigen::VectorXd x0 = U.colPivHouseholderQr().solve(v);
        if ((U * x0 - v).cwiseAbs().maxCoeff() <= 1e-7 * scale) {
          Eigen::MatrixXd N = lu.kernel();  // d x (d - rank)
          if (N.cols() == 0) {
            consider(x0);
          } else if (N.row(k).cwiseAbs().maxCoeff() <= 1e-10) {
            // r constant on the affine set: minimize ||c|| over it.
            Eigen::MatrixXd Nc = N.topRows(k);
            Eigen::VectorXd tstar =
                (Nc.transpose() * Nc)
                    .ldlt()
                    .solve(-Nc.transpose() * x0.head(k));
            consider(x0 + N * tstar);
          }
        }
      }
      // Next subset.
      int pos = t - 1;
      while (pos >= 0 &&
             subset[static_cast<size_t>(pos)] == rows - t + pos) {
        --pos;
      }
      if (pos < 0) break;
      ++subset[static_cast<size_t>(pos)];
      for (int q = pos + 1; q < t; ++q) {
        subset[static_cast<size_t>(q)] = subset[static_cast<size_t>(q - 1)] + 1;
      }
    }
  }
  return best;
}

}  // namespace yolkkit::testing
