#pragma once

// Tiny dense solvers for the d <= 4 systems that show up in the LP and
// certificate code. Gaussian elimination with partial pivoting; returns
// false on (near-)singular systems.

#include <array>
#include <cmath>
#include <cstddef>

namespace yolkkit::detail {

template <int N>
bool solve_linear(std::array<std::array<double, N>, N> a,
                  std::array<double, N> b, std::array<double, N>& x,
                  double pivot_tol = 1e-12) {
  std::array<int, N> piv{};
  for (int i = 0; i < N; ++i) piv[i] = i;
  for (int col = 0; col < N; ++col) {
    int best = col;
    double best_abs = std::abs(a[col][col]);
    for (int r = col + 1; r < N; ++r) {
      double v = std::abs(a[r][col]);
      if (v > best_abs) {
        best_abs = v;
        best = r;
      }
    }
    if (best_abs <= pivot_tol) return false;
    if (best != col) {
      std::swap(a[best], a[col]);
      std::swap(b[best], b[col]);
    }
    for (int r = col + 1; r < N; ++r) {
      double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < N; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int row = N - 1; row >= 0; --row) {
    double s = b[row];
    for (int c = row + 1; c < N; ++c) s -= a[row][c] * x[c];
    x[row] = s / a[row][row];
  }
  return true;
}

}  // namespace yolkkit::detail
