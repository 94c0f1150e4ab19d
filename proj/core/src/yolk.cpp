#include "yolkkit/yolk.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace yolkkit {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGolden = 0.6180339887498949;  // 1/phi

// Per-electorate sweep precomputation. Critical angles and the per-arc slab
// indices depend only on the point set, not on the query center.
struct SweepContext {
  int n = 0;
  double coord_scale = 1.0;
  std::vector<double> px, py;
  struct Arc {
    double t0, t1;   // [t0, t1] with t1 <= t0 + pi
    int lo, hi;      // point indices holding the slab bounds on this arc
  };
  std::vector<Arc> arcs;
};

SweepContext make_sweep_context(const Electorate& e) {
  SweepContext ctx;
  ctx.n = e.size();
  ctx.px.reserve(e.points.size());
  ctx.py.reserve(e.points.size());
  for (const Point& p : e.points) {
    ctx.px.push_back(p.x());
    ctx.py.push_back(p.y());
    ctx.coord_scale = std::max(ctx.coord_scale, std::abs(p.x()) + std::abs(p.y()));
  }

  std::vector<double> crit;
  for (int i = 0; i < ctx.n; ++i) {
    for (int j = i + 1; j < ctx.n; ++j) {
      double dx = ctx.px[static_cast<size_t>(i)] - ctx.px[static_cast<size_t>(j)];
      double dy = ctx.py[static_cast<size_t>(i)] - ctx.py[static_cast<size_t>(j)];
      if (std::abs(dx) <= 1e-14 && std::abs(dy) <= 1e-14) continue;
      // a(theta).(p_i - p_j) = 0 at theta perpendicular to the difference.
      crit.push_back(wrap_angle_pi(std::atan2(dy, dx) + kPi / 2.0));
    }
  }
  std::sort(crit.begin(), crit.end());
  // Merge ties within 1e-12.
  std::vector<double> merged;
  for (double t : crit) {
    if (merged.empty() || t - merged.back() > 1e-12) merged.push_back(t);
  }
  if (!merged.empty() && merged.size() > 1 &&
      merged.front() + kPi - merged.back() <= 1e-12) {
    merged.pop_back();
  }
  if (merged.empty()) merged.push_back(0.0);

  auto slab_indices = [&](double theta, int& lo, int& hi) {
    double c = std::cos(theta), s = std::sin(theta);
    std::vector<std::pair<double, int>> proj(static_cast<size_t>(ctx.n));
    for (int i = 0; i < ctx.n; ++i) {
      proj[static_cast<size_t>(i)] = {
          c * ctx.px[static_cast<size_t>(i)] + s * ctx.py[static_cast<size_t>(i)], i};
    }
    std::sort(proj.begin(), proj.end());
    if (ctx.n % 2 == 1) {
      lo = hi = proj[static_cast<size_t>(ctx.n / 2)].second;
    } else {
      lo = proj[static_cast<size_t>(ctx.n / 2 - 1)].second;
      hi = proj[static_cast<size_t>(ctx.n / 2)].second;
    }
  };

  const size_t m = merged.size();
  ctx.arcs.reserve(m);
  for (size_t i = 0; i < m; ++i) {
    double t0 = merged[i];
    double t1 = (i + 1 < m) ? merged[i + 1] : merged[0] + kPi;
    SweepContext::Arc arc;
    arc.t0 = t0;
    arc.t1 = t1;
    slab_indices(0.5 * (t0 + t1), arc.lo, arc.hi);
    ctx.arcs.push_back(arc);
  }
  return ctx;
}

// One tangent candidate of the profile: the median line (a(theta), b) at
// distance `value` from the query center.
struct ProfileEntry {
  double theta;  // in [0, pi)
  double b;
  double value;
  int idx;       // electorate point realizing the slab bound
};

struct Profile {
  double max_value = 0.0;
  double argmax_theta = 0.0;
  double argmax_b = 0.0;
  std::vector<ProfileEntry> entries;
};

Profile evaluate_profile(const SweepContext& ctx, double cx, double cy) {
  Profile prof;
  auto eval_point = [&](double theta, int idx) {
    // Wrap before evaluating so (theta, b) stay a consistent line pair.
    double tw = wrap_angle_pi(theta);
    double c = std::cos(tw), s = std::sin(tw);
    double b = c * ctx.px[static_cast<size_t>(idx)] + s * ctx.py[static_cast<size_t>(idx)];
    double v = std::abs(c * cx + s * cy - b);
    prof.entries.push_back({tw, b, v, idx});
    if (v > prof.max_value) {
      prof.max_value = v;
      prof.argmax_theta = tw;
      prof.argmax_b = b;
    }
  };

  for (const SweepContext::Arc& arc : ctx.arcs) {
    int ids[2] = {arc.lo, arc.hi};
    int nid = (arc.lo == arc.hi) ? 1 : 2;
    for (int q = 0; q < nid; ++q) {
      int idx = ids[q];
      eval_point(arc.t0, idx);
      eval_point(arc.t1, idx);
      // Interior peak of |cos(theta - phi)| at theta == phi (mod pi).
      double dx = cx - ctx.px[static_cast<size_t>(idx)];
      double dy = cy - ctx.py[static_cast<size_t>(idx)];
      if (std::abs(dx) > 1e-300 || std::abs(dy) > 1e-300) {
        double tau = std::atan2(dy, dx);
        while (tau < arc.t0 - 1e-12) tau += kPi;
        while (tau > arc.t1 + 1e-12) tau -= kPi;
        if (tau >= arc.t0 - 1e-12 && tau <= arc.t1 + 1e-12) {
          eval_point(std::clamp(tau, arc.t0, arc.t1), idx);
        }
      }
    }
  }
  return prof;
}

// Outward tangent normals (angles in [0, 2pi)) for entries achieving the
// profile maximum within eps, deduplicated.
std::vector<double> tangent_angles(const Profile& prof, double cx, double cy,
                                   double eps) {
  std::vector<double> psi;
  for (const ProfileEntry& en : prof.entries) {
    if (en.value < prof.max_value - eps) continue;
    double s = std::cos(en.theta) * cx + std::sin(en.theta) * cy - en.b;
    if (std::abs(s) <= 1e-300) continue;
    double a = (s > 0.0) ? en.theta + kPi : en.theta;
    psi.push_back(wrap_angle_2pi(a));
  }
  std::sort(psi.begin(), psi.end());
  std::vector<double> out;
  for (double a : psi) {
    if (out.empty() || a - out.back() > 1e-9) out.push_back(a);
  }
  if (out.size() > 1 && out.front() + 2.0 * kPi - out.back() <= 1e-9) {
    out.pop_back();
  }
  return out;
}

// Largest circular gap of a sorted angle list; 2*pi for fewer than one.
double max_circular_gap(const std::vector<double>& sorted) {
  if (sorted.empty()) return 2.0 * kPi;
  if (sorted.size() == 1) return 2.0 * kPi;
  double gap = sorted.front() + 2.0 * kPi - sorted.back();
  for (size_t i = 1; i < sorted.size(); ++i) {
    gap = std::max(gap, sorted[i] - sorted[i - 1]);
  }
  return gap;
}

// Start angle of the largest circular gap.
double max_gap_start(const std::vector<double>& sorted) {
  double gap = sorted.front() + 2.0 * kPi - sorted.back();
  double start = sorted.back();
  for (size_t i = 1; i < sorted.size(); ++i) {
    double g = sorted[i] - sorted[i - 1];
    if (g > gap) {
      gap = g;
      start = sorted[i - 1];
    }
  }
  return start;
}

}  // namespace

SweepEvaluation max_median_distance(const Point& c, const Electorate& e) {
  if (e.dim != 2 || c.dim() != 2) {
    throw_error(ErrorCode::unsupported_dimension,
                "max_median_distance requires k = 2");
  }
  SweepContext ctx = make_sweep_context(e);
  Profile prof = evaluate_profile(ctx, c.x(), c.y());
  SweepEvaluation ev;
  ev.value = prof.max_value;
  ev.argmax_direction = direction_from_angle(prof.argmax_theta);
  ev.argmax_slab = median_slab(ev.argmax_direction, e);
  return ev;
}

YolkResult yolk(const Electorate& e, const YolkOptions& opts) {
  if (e.dim != 2) {
    throw_error(ErrorCode::unsupported_dimension, "yolk requires k = 2");
  }
  SweepContext ctx = make_sweep_context(e);
  int evals = 0;
  auto f = [&](double cx, double cy) {
    ++evals;
    return evaluate_profile(ctx, cx, cy).max_value;
  };

  // Start at the LP yolk center; its radius is a valid lower bound.
  LpYolkResult lp = lp_yolk(e);
  double cx = lp.ball.center.x();
  double cy = lp.ball.center.y();
  double lower = lp.degenerate ? 0.0 : lp.ball.radius;

  Profile prof = evaluate_profile(ctx, cx, cy);
  ++evals;
  double fc = prof.max_value;

  // Golden-section minimization of the convex restriction t -> f(c + t*v).
  auto line_search = [&](double vx, double vy, double t_hi) {
    double a = 0.0, b = t_hi;
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = f(cx + x1 * vx, cy + x1 * vy);
    double f2 = f(cx + x2 * vx, cy + x2 * vy);
    while (b - a > 1e-13 * (1.0 + std::abs(a) + std::abs(b)) &&
           evals < opts.max_iter) {
      if (f1 <= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kGolden * (b - a);
        f1 = f(cx + x1 * vx, cy + x1 * vy);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kGolden * (b - a);
        f2 = f(cx + x2 * vx, cy + x2 * vy);
      }
    }
    double t = 0.5 * (a + b);
    double ft = f(cx + t * vx, cy + t * vy);
    double noise = 3.2e-15 * (ctx.coord_scale + std::abs(cx) + std::abs(cy));
    if (ft < fc - noise) {
      cx += t * vx;
      cy += t * vy;
      fc = ft;
      return true;
    }
    return false;
  };

  // Polyak warmup: cheap subgradient steps toward the LP lower bound.
  for (int it = 0; it < 50 && evals < opts.max_iter; ++it) {
    if (fc <= lower + 1e-12 || fc <= 1e-12) break;
    double theta = prof.argmax_theta;
    double s = std::cos(theta) * cx + std::sin(theta) * cy - prof.argmax_b;
    double step = 0.7 * (fc - lower);
    double gx = (s > 0.0 ? 1.0 : -1.0) * std::cos(theta);
    double gy = (s > 0.0 ? 1.0 : -1.0) * std::sin(theta);
    double nx = cx - step * gx;
    double ny = cy - step * gy;
    Profile p2 = evaluate_profile(ctx, nx, ny);
    ++evals;
    if (p2.max_value < fc) {
      cx = nx;
      cy = ny;
      fc = p2.max_value;
      prof = std::move(p2);
    } else {
      break;
    }
  }

  prof = evaluate_profile(ctx, cx, cy);
  ++evals;
  fc = prof.max_value;

  // Exact polish step: the near-max entries are genuine median lines, so the
  // minimax LP over them lower-bounds f and its center equalizes the active
  // distances exactly. Near the optimum this jumps straight to the
  // minimizer, which the gap certificate then accepts at full precision.
  auto slab_at = [&](double theta, double& b_lo, double& b_hi) {
    double c = std::cos(theta), s = std::sin(theta);
    std::vector<double> proj(e.points.size());
    for (size_t i = 0; i < e.points.size(); ++i) {
      proj[i] = c * e.points[i].x() + s * e.points[i].y();
    }
    std::sort(proj.begin(), proj.end());
    size_t n = proj.size();
    if (n % 2 == 1) {
      b_lo = b_hi = proj[n / 2];
    } else {
      b_lo = proj[n / 2 - 1];
      b_hi = proj[n / 2];
    }
  };

  // 0 = no move, 1 = moved at equal value (equalized), 2 = strictly better.
  auto lp_polish = [&](double eps) -> int {
    // Lines are shifted so the current center is the origin: the LP's
    // minimum-norm tie-break then resolves flat faces toward the current
    // iterate instead of dragging it along the face. Both slab ends of each
    // achieving direction enter the model, since the ball must reach both.
    std::vector<Hyperplane> lines;
    auto add_line = [&](double a0, double a1, double b) {
      Hyperplane h{{a0, a1}, b - (a0 * cx + a1 * cy)};
      for (const Hyperplane& seen : lines) {
        if (same_hyperplane(seen, h, 1e-9)) return;
      }
      lines.push_back(std::move(h));
    };
    std::vector<double> thetas;
    for (const ProfileEntry& en : prof.entries) {
      if (en.value >= prof.max_value - eps) thetas.push_back(en.theta);
    }
    if (thetas.empty()) return 0;
    // The achieving directions often sit in a narrow wedge where the slab
    // family varies smoothly; sample the wedge so the model sees the whole
    // family, not just the discrete candidates.
    {
      double ref = prof.argmax_theta;
      double lo_d = 0.0, hi_d = 0.0;
      for (double t : thetas) {
        double d = t - ref;
        while (d > kPi / 2.0) d -= kPi;
        while (d < -kPi / 2.0) d += kPi;
        lo_d = std::min(lo_d, d);
        hi_d = std::max(hi_d, d);
      }
      double margin = 0.2 * (hi_d - lo_d) + 1e-3;
      lo_d -= margin;
      hi_d += margin;
      const int kSamples = 33;
      for (int s = 0; s < kSamples; ++s) {
        thetas.push_back(wrap_angle_pi(
            ref + lo_d + (hi_d - lo_d) * static_cast<double>(s) / (kSamples - 1)));
      }
    }
    for (double theta : thetas) {
      if (lines.size() >= 120) break;
      double a0 = std::cos(theta), a1 = std::sin(theta);
      double b_lo = 0.0, b_hi = 0.0;
      slab_at(theta, b_lo, b_hi);
      add_line(a0, a1, b_lo);
      if (b_hi != b_lo) add_line(a0, a1, b_hi);
    }
    if (lines.empty()) return 0;
    Ball b = solve_minimax_lines(lines, 2);
    double nx = cx + b.center.x();
    double ny = cy + b.center.y();
    double moved = std::hypot(b.center.x(), b.center.y());
    if (moved <= 1e-15) return 0;
    Profile p2 = evaluate_profile(ctx, nx, ny);
    ++evals;
    double fn = p2.max_value;
    double noise = 3.2e-15 * (ctx.coord_scale + std::abs(cx) + std::abs(cy));
    if (fn <= fc + noise) {
      cx = nx;
      cy = ny;
      bool strict = fn < fc - std::max(1e-13, 32.0 * noise);
      fc = fn;
      prof = std::move(p2);
      return strict ? 2 : 1;
    }
    return 0;
  };

  bool certified = false;
  std::deque<double> window;
  int stall = 0;
  bool polished = false;
  const double cert_slack = kPi + 1e-9;

  while (evals < opts.max_iter) {
    if (fc <= 1e-12) {
      certified = true;  // radius-zero ball meets every median line
      break;
    }
    std::vector<double> cert_psi = tangent_angles(prof, cx, cy, opts.tol);
    bool cert_ok = max_circular_gap(cert_psi) <= cert_slack;

    window.push_back(fc);
    if (window.size() > 50) window.pop_front();
    bool stalled50 =
        window.size() == 50 && window.front() - window.back() < 1e-9;
    if (cert_ok && (stall >= 2 || stalled50)) {
      certified = true;
      break;
    }

    bool improved = false;
    if (!polished) {
      // Widening the model admits near-binding families a few orders of
      // magnitude below the max; the LP jump then lands on their joint
      // optimum instead of zigzagging toward it.
      for (double er : {std::max(opts.tol, 1e-6), 1e-4, 3e-3}) {
        int got = lp_polish(er * std::max(1.0, fc));
        if (got == 2) {
          improved = true;
          break;
        }
      }
      if (!improved) {
        // Flat-valley endgame: when the optimum balances the two slab ends
        // of one direction family, f is numerically constant near the
        // balancing point, but the certificate needs the center equalized
        // far below what value comparisons can resolve. Snapping to the
        // midpoint of the two realizing points closes the gap exactly.
        // Sides are judged by the outward normal angle: entries can carry
        // either line orientation when the wedge straddles the 0/pi wrap.
        double s_arg = std::cos(prof.argmax_theta) * cx +
                       std::sin(prof.argmax_theta) * cy - prof.argmax_b;
        double psi_arg = wrap_angle_2pi(
            s_arg > 0.0 ? prof.argmax_theta + kPi : prof.argmax_theta);
        int idx1 = -1, idx2 = -1;
        for (const ProfileEntry& en : prof.entries) {
          if (en.value < prof.max_value - std::max(opts.tol, 1e-6)) continue;
          double s = std::cos(en.theta) * cx + std::sin(en.theta) * cy - en.b;
          double dth = std::abs(wrap_angle_pi(en.theta) - wrap_angle_pi(prof.argmax_theta));
          dth = std::min(dth, kPi - dth);
          if (dth > 1e-2) continue;
          double psi = wrap_angle_2pi(s > 0.0 ? en.theta + kPi : en.theta);
          double dpsi = std::abs(psi - psi_arg);
          dpsi = std::min(dpsi, 2.0 * kPi - dpsi);
          if (dpsi < kPi / 2.0) {
            if (idx1 < 0) idx1 = en.idx;
          } else if (idx2 < 0) {
            idx2 = en.idx;
          }
        }
        if (idx1 >= 0 && idx2 >= 0 && idx1 != idx2) {
          double nx = 0.5 * (e.points[static_cast<size_t>(idx1)].x() +
                             e.points[static_cast<size_t>(idx2)].x());
          double ny = 0.5 * (e.points[static_cast<size_t>(idx1)].y() +
                             e.points[static_cast<size_t>(idx2)].y());
          if (std::hypot(nx - cx, ny - cy) > 1e-16) {
            Profile p2 = evaluate_profile(ctx, nx, ny);
            ++evals;
            double noise = 3.2e-15 * (ctx.coord_scale + std::abs(cx) + std::abs(cy));
            if (p2.max_value <= fc + noise) {
              cx = nx;
              cy = ny;
              fc = p2.max_value;
              prof = std::move(p2);
            }
          }
        }
        polished = true;
      }
    }

    // Descent direction from the sharp active set: the midpoint of the
    // covered arc of outward normals strictly decreases every active
    // distance.
    if (!improved) {
      double eps_act = std::min(opts.tol, 1e-7 * std::max(1.0, fc));
      std::vector<double> act_psi = tangent_angles(prof, cx, cy, eps_act);
      if (!act_psi.empty() && max_circular_gap(act_psi) > kPi) {
        double gs = max_gap_start(act_psi);
        double gap = max_circular_gap(act_psi);
        double mid = gs + gap + 0.5 * (2.0 * kPi - gap);  // covered-arc midpoint
        improved = line_search(std::cos(mid), std::sin(mid), 2.0 * fc + 1e-9);
      }
    }
    if (!improved && stall >= 1) {
      // Coordinate-wise and diagonal golden-section refinement.
      const double dirs[6][2] = {{1, 0}, {0, 1},
                                 {0.7071067811865476, 0.7071067811865476},
                                 {0.7071067811865476, -0.7071067811865476},
                                 {0.3826834323650898, 0.9238795325112867},
                                 {0.9238795325112867, -0.3826834323650898}};
      for (const auto& dv : dirs) {
        double before = fc;
        // Search both orientations.
        line_search(dv[0], dv[1], 0.5 * fc + 1e-9);
        line_search(-dv[0], -dv[1], 0.5 * fc + 1e-9);
        if (before - fc > 1e-13) improved = true;
      }
    }
    prof = evaluate_profile(ctx, cx, cy);
    ++evals;
    fc = prof.max_value;
    if (improved) {
      stall = 0;
      polished = false;
    } else {
      ++stall;
      if (stall > 64) break;  // nothing moves; let the certificate decide
    }
  }

  YolkResult res;
  res.ball = Ball{Point(cx, cy), fc};
  res.iterations = evals;
  if (fc > 1e-12) {
    std::vector<double> psi = tangent_angles(prof, cx, cy, opts.tol);
    certified = max_circular_gap(psi) <= cert_slack;
    res.tangent_directions.reserve(psi.size());
    for (double a : psi) res.tangent_directions.push_back(direction_from_angle(a));
  } else {
    certified = true;
  }
  res.certified = certified;
  if (!certified) {
    throw ConvergenceError(res, "yolk: iteration cap reached without a "
                                "passing hemisphere certificate");
  }
  return res;
}

Ball brute_force_yolk(const Electorate& e, int n_dirs, const GridSpec& grid) {
  if (e.dim != 2) {
    throw_error(ErrorCode::unsupported_dimension,
                "brute_force_yolk requires k = 2");
  }
  if (n_dirs < 1000) {
    throw_error(ErrorCode::invalid_parameter,
                "brute_force_yolk requires n_dirs >= 1000");
  }

  // Per-direction slabs are center-independent.
  std::vector<double> ct(static_cast<size_t>(n_dirs)), st(static_cast<size_t>(n_dirs)),
      blo(static_cast<size_t>(n_dirs)), bhi(static_cast<size_t>(n_dirs));
  std::vector<double> proj(e.points.size());
  for (int j = 0; j < n_dirs; ++j) {
    double theta = kPi * static_cast<double>(j) / static_cast<double>(n_dirs);
    double c = std::cos(theta), s = std::sin(theta);
    ct[static_cast<size_t>(j)] = c;
    st[static_cast<size_t>(j)] = s;
    for (size_t i = 0; i < e.points.size(); ++i) {
      proj[i] = c * e.points[i].x() + s * e.points[i].y();
    }
    std::sort(proj.begin(), proj.end());
    size_t n = proj.size();
    if (n % 2 == 1) {
      blo[static_cast<size_t>(j)] = bhi[static_cast<size_t>(j)] = proj[n / 2];
    } else {
      blo[static_cast<size_t>(j)] = proj[n / 2 - 1];
      bhi[static_cast<size_t>(j)] = proj[n / 2];
    }
  }

  auto sampled_f = [&](double cx, double cy) {
    double m = 0.0;
    for (int j = 0; j < n_dirs; ++j) {
      double t = ct[static_cast<size_t>(j)] * cx + st[static_cast<size_t>(j)] * cy;
      double v = std::max(std::abs(t - blo[static_cast<size_t>(j)]),
                          std::abs(t - bhi[static_cast<size_t>(j)]));
      if (v > m) m = v;
    }
    return m;
  };

  double min_x = e.points.front().x(), max_x = min_x;
  double min_y = e.points.front().y(), max_y = min_y;
  for (const Point& p : e.points) {
    min_x = std::min(min_x, p.x());
    max_x = std::max(max_x, p.x());
    min_y = std::min(min_y, p.y());
    max_y = std::max(max_y, p.y());
  }
  double ext = std::max({max_x - min_x, max_y - min_y, 0.5});
  double pad = grid.padding * ext;
  double cx0 = 0.5 * (min_x + max_x), cy0 = 0.5 * (min_y + max_y);
  double half = 0.5 * ext + pad;

  double best_x = cx0, best_y = cy0;
  double best_v = sampled_f(best_x, best_y);
  int cells = std::max(grid.cells_per_axis, 2);
  for (int level = 0; level <= grid.refinements; ++level) {
    for (int iy = 0; iy <= cells; ++iy) {
      double y = cy0 - half + 2.0 * half * static_cast<double>(iy) / cells;
      for (int ix = 0; ix <= cells; ++ix) {
        double x = cx0 - half + 2.0 * half * static_cast<double>(ix) / cells;
        double v = sampled_f(x, y);
        if (v < best_v) {
          best_v = v;
          best_x = x;
          best_y = y;
        }
      }
    }
    cx0 = best_x;
    cy0 = best_y;
    half = 2.2 * (2.0 * half / cells);  // one-cell margin around the best cell
  }
  return Ball{Point(best_x, best_y), best_v};
}

}  // namespace yolkkit
