#include "yolkkit/minimax_lp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include "small_linalg.hpp"

namespace yolkkit {

namespace {

constexpr int kMaxDim = 4;
using Vec = std::array<double, kMaxDim>;

struct Row {
  Vec g{};
  double h = 0.0;
};

double row_dot(const Vec& g, const Vec& x, int d) {
  double s = 0.0;
  for (int i = 0; i < d; ++i) s += g[i] * x[i];
  return s;
}

double feas_eps(const Row& r) { return 1e-10 * (1.0 + std::abs(r.h)); }

double clamp(double v, double lo, double hi) {
  return std::min(std::max(v, lo), hi);
}

// Seidel's incremental LP: minimize obj.x subject to rows (g.x <= h) and the
// box lo <= x <= hi. Rows are inserted in the order given; violations are
// repaired by recursing on the violated constraint's boundary.
bool seidel_solve(int d, const std::vector<Row>& rows, const Vec& obj,
                  const Vec& lo, const Vec& hi, Vec& x) {
  if (d == 1) {
    double L = lo[0], U = hi[0];
    for (const Row& r : rows) {
      double a = r.g[0];
      if (std::abs(a) <= 1e-13) {
        if (r.h < -feas_eps(r)) return false;
        continue;
      }
      if (a > 0.0) {
        U = std::min(U, r.h / a);
      } else {
        L = std::max(L, r.h / a);
      }
    }
    if (L > U + 1e-9) return false;
    if (obj[0] > 1e-15) {
      x[0] = L;
    } else if (obj[0] < -1e-15) {
      x[0] = U;
    } else {
      x[0] = clamp(0.0, L, U);
    }
    return true;
  }

  // Box optimum, deterministic for zero objective coefficients.
  for (int j = 0; j < d; ++j) {
    if (obj[j] > 1e-15) {
      x[j] = lo[j];
    } else if (obj[j] < -1e-15) {
      x[j] = hi[j];
    } else {
      x[j] = clamp(0.0, lo[j], hi[j]);
    }
  }

  for (size_t t = 0; t < rows.size(); ++t) {
    const Row& r = rows[t];
    if (row_dot(r.g, x, d) <= r.h + feas_eps(r)) continue;

    // Violated: solve on the boundary g.x = h, eliminating the variable
    // with the largest coefficient.
    int j = 0;
    double gj = std::abs(r.g[0]);
    for (int l = 1; l < d; ++l) {
      if (std::abs(r.g[l]) > gj) {
        gj = std::abs(r.g[l]);
        j = l;
      }
    }
    if (gj <= 1e-13) return false;  // 0 <= h is violated, inconsistent

    // x_j = c0 + sum_{l != j} c_l x_l
    Vec coef{};
    double c0 = r.h / r.g[j];
    for (int l = 0; l < d; ++l) {
      if (l != j) coef[l] = -r.g[l] / r.g[j];
    }

    // Build the (d-1)-dim subproblem over the remaining variables.
    std::array<int, kMaxDim> vmap{};
    int dd = 0;
    for (int l = 0; l < d; ++l) {
      if (l != j) vmap[dd++] = l;
    }
    Vec sub_obj{}, sub_lo{}, sub_hi{};
    for (int l = 0; l < dd; ++l) {
      int v = vmap[l];
      sub_obj[l] = obj[v] + obj[j] * coef[v];
      sub_lo[l] = lo[v];
      sub_hi[l] = hi[v];
    }
    std::vector<Row> sub_rows;
    sub_rows.reserve(t + 2);
    {
      Row up, down;  // box bounds of the eliminated variable become rows
      for (int l = 0; l < dd; ++l) {
        up.g[l] = coef[vmap[l]];
        down.g[l] = -coef[vmap[l]];
      }
      up.h = hi[j] - c0;
      down.h = c0 - lo[j];
      sub_rows.push_back(up);
      sub_rows.push_back(down);
    }
    for (size_t tt = 0; tt < t; ++tt) {
      const Row& rr = rows[tt];
      Row nr;
      for (int l = 0; l < dd; ++l) {
        nr.g[l] = rr.g[vmap[l]] + rr.g[j] * coef[vmap[l]];
      }
      nr.h = rr.h - rr.g[j] * c0;
      sub_rows.push_back(nr);
    }

    Vec y{};
    if (!seidel_solve(dd, sub_rows, sub_obj, sub_lo, sub_hi, y)) return false;

    double xj = c0;
    for (int l = 0; l < dd; ++l) {
      x[vmap[l]] = y[l];
      xj += coef[vmap[l]] * y[l];
    }
    x[j] = xj;
  }
  return true;
}

struct NormLine {
  std::array<double, 3> a{};
  double b = 0.0;
};

double max_dist(const std::vector<NormLine>& ls, const std::array<double, 3>& c,
                int k) {
  double m = 0.0;
  for (const NormLine& l : ls) {
    double s = -l.b;
    for (int i = 0; i < k; ++i) s += l.a[i] * c[i];
    m = std::max(m, std::abs(s));
  }
  return m;
}

bool norm_less(const std::array<double, 3>& p, const std::array<double, 3>& q,
               int k) {
  double np = 0.0, nq = 0.0;
  for (int i = 0; i < k; ++i) {
    np += p[i] * p[i];
    nq += q[i] * q[i];
  }
  if (np < nq - 1e-15) return true;
  if (np > nq + 1e-15) return false;
  for (int i = 0; i < k; ++i) {
    if (p[i] < q[i] - 1e-15) return true;
    if (p[i] > q[i] + 1e-15) return false;
  }
  return false;
}

// Minimum-norm point of the optimal face {c : max_i |a_i.c - b_i| <= r}.
// Enumerates candidate tight sets of size <= k; each candidate is the
// least-norm solution of its equality system.
std::array<double, 3> minnorm_center(const std::vector<NormLine>& ls, int k,
                                     double r, double feps,
                                     const std::array<double, 3>& fallback) {
  const int m = static_cast<int>(ls.size());
  std::array<double, 3> best = fallback;
  bool have_best = true;

  auto consider = [&](const std::array<double, 3>& c) {
    if (max_dist(ls, c, k) > r + feps) return;
    if (!have_best || norm_less(c, best, k)) {
      best = c;
      have_best = true;
    }
  };

  consider({0.0, 0.0, 0.0});

  // Sign-rows: s*(a_i.c - b_i) = r, s in {+1, -1}.
  struct SRow {
    std::array<double, 3> u{};
    double v = 0.0;
  };
  std::vector<SRow> srows;
  std::vector<int> pair_rows;
  srows.reserve(2 * static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (double s : {1.0, -1.0}) {
      SRow sr;
      for (int j = 0; j < k; ++j) sr.u[j] = s * ls[static_cast<size_t>(i)].a[j];
      sr.v = r + s * ls[static_cast<size_t>(i)].b;
      srows.push_back(sr);
    }
  }
  // Cap the quadratic/cubic subset scan on large inputs to rows that are
  // nearly tight at the fallback point.
  pair_rows.resize(srows.size());
  std::iota(pair_rows.begin(), pair_rows.end(), 0);
  if (m > 200) {
    std::vector<int> active;
    for (size_t i = 0; i < srows.size(); ++i) {
      double s = -srows[i].v;
      for (int j = 0; j < k; ++j) s += srows[i].u[j] * fallback[j];
      if (std::abs(s) <= 1e-6 * (1.0 + std::abs(srows[i].v))) {
        active.push_back(static_cast<int>(i));
      }
    }
    pair_rows = std::move(active);
  }

  // Singles: least-norm point on a single tight hyperplane.
  for (const SRow& sr : srows) {
    std::array<double, 3> c{};
    for (int j = 0; j < k; ++j) c[j] = sr.v * sr.u[j];
    consider(c);
  }

  // Pairs.
  for (size_t ii = 0; ii < pair_rows.size(); ++ii) {
    for (size_t jj = ii + 1; jj < pair_rows.size(); ++jj) {
      const SRow& r1 = srows[static_cast<size_t>(pair_rows[ii])];
      const SRow& r2 = srows[static_cast<size_t>(pair_rows[jj])];
      if (k == 2) {
        double det = r1.u[0] * r2.u[1] - r1.u[1] * r2.u[0];
        if (std::abs(det) <= 1e-12) continue;
        std::array<double, 3> c{};
        c[0] = (r1.v * r2.u[1] - r2.v * r1.u[1]) / det;
        c[1] = (r1.u[0] * r2.v - r2.u[0] * r1.v) / det;
        consider(c);
      } else {
        // Least-norm point on the intersection of two planes:
        // c = G^T (G G^T)^{-1} v.
        double g11 = 0.0, g12 = 0.0, g22 = 0.0;
        for (int j = 0; j < 3; ++j) {
          g11 += r1.u[j] * r1.u[j];
          g12 += r1.u[j] * r2.u[j];
          g22 += r2.u[j] * r2.u[j];
        }
        double det = g11 * g22 - g12 * g12;
        if (std::abs(det) <= 1e-12) continue;
        double l1 = (g22 * r1.v - g12 * r2.v) / det;
        double l2 = (g11 * r2.v - g12 * r1.v) / det;
        std::array<double, 3> c{};
        for (int j = 0; j < 3; ++j) c[j] = l1 * r1.u[j] + l2 * r2.u[j];
        consider(c);
      }
    }
  }

  // Triples determine a point only in k = 3.
  if (k == 3) {
    for (size_t ii = 0; ii < pair_rows.size(); ++ii) {
      for (size_t jj = ii + 1; jj < pair_rows.size(); ++jj) {
        for (size_t ll = jj + 1; ll < pair_rows.size(); ++ll) {
          const SRow& r1 = srows[static_cast<size_t>(pair_rows[ii])];
          const SRow& r2 = srows[static_cast<size_t>(pair_rows[jj])];
          const SRow& r3 = srows[static_cast<size_t>(pair_rows[ll])];
          std::array<std::array<double, 3>, 3> A{
              std::array<double, 3>{r1.u[0], r1.u[1], r1.u[2]},
              std::array<double, 3>{r2.u[0], r2.u[1], r2.u[2]},
              std::array<double, 3>{r3.u[0], r3.u[1], r3.u[2]}};
          std::array<double, 3> rhs{r1.v, r2.v, r3.v};
          std::array<double, 3> c{};
          if (!detail::solve_linear<3>(A, rhs, c)) continue;
          consider(c);
        }
      }
    }
  }

  return best;
}

}  // namespace

Ball solve_minimax_lines(const std::vector<Hyperplane>& lines, int k) {
  if (lines.empty()) {
    throw_error(ErrorCode::empty_constraint_set,
                "solve_minimax_lines: no constraint hyperplanes");
  }
  if (k != 2 && k != 3) {
    throw_error(ErrorCode::unsupported_dimension,
                "solve_minimax_lines supports k in {2, 3}");
  }
  const int d = k + 1;

  std::vector<NormLine> ls;
  ls.reserve(lines.size());
  double scale = 1.0;
  for (const Hyperplane& h : lines) {
    if (h.dim() != k) {
      throw_error(ErrorCode::dimension_mismatch,
                  "solve_minimax_lines: hyperplane dimension mismatch");
    }
    double n = norm(h.normal);
    if (n <= kUnitNormTol) {
      throw_error(ErrorCode::zero_normal,
                  "solve_minimax_lines: zero-normal hyperplane");
    }
    NormLine l;
    for (int j = 0; j < k; ++j) l.a[static_cast<size_t>(j)] = h.normal[static_cast<size_t>(j)] / n;
    l.b = h.offset / n;
    scale = std::max(scale, std::abs(l.b));
    ls.push_back(l);
  }
  // Variables x = (c_1..c_k, r); constraints a.c - r <= b and -a.c - r <= -b.
  std::vector<Row> rows;
  rows.reserve(2 * ls.size());
  for (const NormLine& l : ls) {
    Row up, down;
    for (int j = 0; j < k; ++j) {
      up.g[j] = l.a[static_cast<size_t>(j)];
      down.g[j] = -l.a[static_cast<size_t>(j)];
    }
    up.g[k] = -1.0;
    down.g[k] = -1.0;
    up.h = l.b;
    down.h = -l.b;
    rows.push_back(up);
    rows.push_back(down);
  }

  // Fixed-seed shuffle keeps the incremental method deterministic while
  // avoiding adversarial insertion orders.
  std::vector<size_t> order(rows.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::mt19937_64 rng(0x594F4C4BULL);
  for (size_t i = order.size(); i > 1; --i) {
    size_t j = rng() % i;
    std::swap(order[i - 1], order[j]);
  }
  std::vector<Row> shuffled;
  shuffled.reserve(rows.size());
  for (size_t idx : order) shuffled.push_back(rows[idx]);

  // Box-bounded Seidel. Near-parallel constraint cones can push the optimal
  // center far beyond the offsets, so grow the box until the solution is
  // interior (exactly parallel families keep a box-pinned coordinate; their
  // radius is box-independent and the min-norm pass below fixes the center).
  Vec x{};
  bool ok = false;
  double M = 8.0 * scale;
  for (int attempt = 0; attempt < 16; ++attempt) {
    Vec obj{}, lo{}, hi{};
    obj[k] = 1.0;
    for (int j = 0; j < k; ++j) {
      lo[j] = -M;
      hi[j] = M;
    }
    lo[k] = 0.0;
    hi[k] = 2.0 * M;
    ok = seidel_solve(d, shuffled, obj, lo, hi, x);
    bool pinned = false;
    if (ok) {
      for (int j = 0; j < k; ++j) {
        if (std::abs(x[j]) >= M * (1.0 - 1e-9)) pinned = true;
      }
      if (x[k] >= 2.0 * M * (1.0 - 1e-9)) pinned = true;
    }
    if (ok && !pinned) break;
    M *= 4.0;
  }
  std::array<double, 3> c{};
  if (ok) {
    for (int j = 0; j < k; ++j) c[static_cast<size_t>(j)] = x[j];
  }
  // The program is always feasible; a failure here would be numerical. The
  // origin with its own max distance is a valid feasible fallback.
  double best_r = max_dist(ls, c, k);

  // Polish: re-solve exactly on bases drawn from the near-active rows.
  std::vector<size_t> near_active;
  for (size_t i = 0; i < rows.size(); ++i) {
    Vec xr{};
    for (int j = 0; j < k; ++j) xr[j] = c[static_cast<size_t>(j)];
    xr[k] = best_r;
    double slack = rows[i].h - row_dot(rows[i].g, xr, d);
    if (std::abs(slack) <= 1e-6 * (1.0 + std::abs(rows[i].h))) {
      near_active.push_back(i);
    }
  }
  if (near_active.size() > 16) near_active.resize(16);
  std::array<double, 3> best_c = c;

  auto try_basis = [&](const std::vector<size_t>& basis) {
    if (d == 3) {
      std::array<std::array<double, 3>, 3> A{};
      std::array<double, 3> rhs{};
      for (int r2 = 0; r2 < 3; ++r2) {
        for (int j = 0; j < 3; ++j) A[r2][j] = rows[basis[static_cast<size_t>(r2)]].g[j];
        rhs[r2] = rows[basis[static_cast<size_t>(r2)]].h;
      }
      std::array<double, 3> y{};
      if (!detail::solve_linear<3>(A, rhs, y)) return;
      if (y[2] < -1e-12) return;
      std::array<double, 3> yc{y[0], y[1], 0.0};
      double v = max_dist(ls, yc, k);
      if (v < best_r - 1e-15) {
        best_r = v;
        best_c = yc;
      }
    } else {
      std::array<std::array<double, 4>, 4> A{};
      std::array<double, 4> rhs{};
      for (int r2 = 0; r2 < 4; ++r2) {
        for (int j = 0; j < 4; ++j) A[r2][j] = rows[basis[static_cast<size_t>(r2)]].g[j];
        rhs[r2] = rows[basis[static_cast<size_t>(r2)]].h;
      }
      std::array<double, 4> y{};
      if (!detail::solve_linear<4>(A, rhs, y)) return;
      if (y[3] < -1e-12) return;
      std::array<double, 3> yc{y[0], y[1], y[2]};
      double v = max_dist(ls, yc, k);
      if (v < best_r - 1e-15) {
        best_r = v;
        best_c = yc;
      }
    }
  };

  const size_t na = near_active.size();
  if (d == 3) {
    for (size_t i = 0; i < na; ++i)
      for (size_t j = i + 1; j < na; ++j)
        for (size_t l = j + 1; l < na; ++l)
          try_basis({near_active[i], near_active[j], near_active[l]});
  } else {
    for (size_t i = 0; i < na; ++i)
      for (size_t j = i + 1; j < na; ++j)
        for (size_t l = j + 1; l < na; ++l)
          for (size_t q = l + 1; q < na; ++q)
            try_basis(
                {near_active[i], near_active[j], near_active[l], near_active[q]});
  }

  // Tie-break non-unique centers to the minimum-norm point of the optimal
  // face, then report the true max distance at the chosen center.
  double feps = std::max(2e-10 * scale, 1e-13);
  std::array<double, 3> cm = minnorm_center(ls, k, best_r, feps, best_c);
  double r_final = max_dist(ls, cm, k);

  std::vector<double> coords(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) coords[static_cast<size_t>(j)] = cm[static_cast<size_t>(j)];
  return Ball{Point(std::move(coords)), r_final};
}

}  // namespace yolkkit
