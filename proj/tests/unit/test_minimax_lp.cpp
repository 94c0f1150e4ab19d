#include <doctest.h>

#include <cmath>

#include "support/instances.hpp"
#include "support/lp_reference.hpp"
#include "support/oracles.hpp"
#include "yolkkit/constructions.hpp"
#include "yolkkit/lp_yolk.hpp"
#include "yolkkit/minimax_lp.hpp"

using namespace yolkkit;
using namespace yolkkit::testing;

namespace {
constexpr double kPi = 3.14159265358979323846;

double max_line_dist(const Point& c, const std::vector<Hyperplane>& lines) {
  double m = 0.0;
  for (const Hyperplane& h : lines) {
    m = std::max(m, point_hyperplane_distance(c, h));
  }
  return m;
}
}  // namespace

TEST_CASE("three lines forming a triangle give the incircle") {
  // Right triangle with legs 3 and 4: x = 0, y = 0, 3x + 4y = 12.
  std::vector<Hyperplane> lines{normalize_hyperplane({1, 0}, 0.0),
                                normalize_hyperplane({0, 1}, 0.0),
                                normalize_hyperplane({3, 4}, 12.0)};
  Ball b = solve_minimax_lines(lines, 2);
  Ball oracle = incircle_of_triangle(Point(0, 0), Point(4, 0), Point(0, 3));
  CHECK(b.radius == doctest::Approx(oracle.radius).epsilon(1e-12));
  CHECK(b.center.x() == doctest::Approx(oracle.center.x()).epsilon(1e-12));
  CHECK(b.center.y() == doctest::Approx(oracle.center.y()).epsilon(1e-12));
  CHECK(b.radius == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two parallel lines: midline with minimum-norm center") {
  std::vector<Hyperplane> lines{normalize_hyperplane({1, 0}, 1.0),
                                normalize_hyperplane({1, 0}, -1.0)};
  Ball b = solve_minimax_lines(lines, 2);
  CHECK(b.radius == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.center.x() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(b.center.y() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("single line: radius zero at the perpendicular foot") {
  std::vector<Hyperplane> lines{normalize_hyperplane({0.6, 0.8}, 2.0)};
  Ball b = solve_minimax_lines(lines, 2);
  CHECK(b.radius == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(b.center.x() == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(b.center.y() == doctest::Approx(1.6).epsilon(1e-12));
}

TEST_CASE("empty and invalid input") {
  CHECK_THROWS_AS(solve_minimax_lines({}, 2), Error);
  CHECK_THROWS_AS(solve_minimax_lines({normalize_hyperplane({1, 0}, 0.0)}, 5),
                  Error);
}

TEST_CASE("matches the exhaustive-basis reference on random line sets") {
  for (int t = 0; t < 120; ++t) {
    SplitMix64 g(SplitMix64::stream_seed(31, static_cast<uint64_t>(t)));
    int m = 1 + static_cast<int>(g.next() % 12);
    std::vector<Hyperplane> lines;
    for (int i = 0; i < m; ++i) {
      lines.push_back(normalize_hyperplane(
          {g.uniform(-1, 1), g.uniform(-1, 1)}, g.uniform(-2, 2)));
    }
    Ball b = solve_minimax_lines(lines, 2);
    LpReferenceResult ref = lp_reference(lines, 2);
    CHECK(std::abs(b.radius - ref.radius) < 1e-9);
    // Minimum-norm tie-break agreement.
    double cn = b.center.x() * b.center.x() + b.center.y() * b.center.y();
    CHECK(cn <= ref.center.squaredNorm() + 1e-7);
  }
}

TEST_CASE("reference agreement in three dimensions") {
  for (int t = 0; t < 40; ++t) {
    SplitMix64 g(SplitMix64::stream_seed(32, static_cast<uint64_t>(t)));
    int m = 1 + static_cast<int>(g.next() % 8);
    std::vector<Hyperplane> planes;
    for (int i = 0; i < m; ++i) {
      planes.push_back(normalize_hyperplane(
          {g.uniform(-1, 1), g.uniform(-1, 1), g.uniform(-1, 1)},
          g.uniform(-2, 2)));
    }
    Ball b = solve_minimax_lines(planes, 3);
    LpReferenceResult ref = lp_reference(planes, 3);
    CHECK(std::abs(b.radius - ref.radius) < 1e-9);
  }
}

TEST_CASE("determinism: identical input, identical output") {
  SplitMix64 g(33);
  std::vector<Hyperplane> lines;
  for (int i = 0; i < 9; ++i) {
    lines.push_back(normalize_hyperplane({g.uniform(-1, 1), g.uniform(-1, 1)},
                                         g.uniform(-2, 2)));
  }
  Ball a = solve_minimax_lines(lines, 2);
  Ball b = solve_minimax_lines(lines, 2);
  CHECK(a.radius == b.radius);
  CHECK(a.center.x() == b.center.x());
  CHECK(a.center.y() == b.center.y());
}

TEST_CASE("lp_yolk on the nondegenerate family") {
  for (double eps : {0.5, 0.1, 0.01}) {
    FamilyInstance fam = family_nondegen(eps);
    LpYolkResult lp = lp_yolk(fam.electorate);
    CHECK(lp.ball.radius ==
          doctest::Approx(eps / std::sqrt(1.0 + eps * eps)).epsilon(1e-9));
    CHECK(std::abs(lp.ball.center.x()) < 1e-9);
    CHECK(std::abs(lp.ball.center.y()) < 1e-9);
    CHECK_FALSE(lp.degenerate);
    CHECK(lp.active.size() >= 2);
  }
}

TEST_CASE("lp_yolk on the equilateral triangle equals the incircle") {
  double side = 1.0;
  Point A(0, 0), B(side, 0), C(side / 2, side * std::sqrt(3.0) / 2.0);
  Electorate tri = Electorate::from_points({A, B, C});
  LpYolkResult lp = lp_yolk(tri);
  Ball oracle = incircle_of_triangle(A, B, C);
  CHECK(lp.ball.radius == doctest::Approx(oracle.radius).epsilon(1e-10));
  CHECK(lp.ball.radius ==
        doctest::Approx(side / (2.0 * std::sqrt(3.0))).epsilon(1e-10));
}

TEST_CASE("lp_yolk degenerate electorates") {
  Electorate dup = Electorate::from_points({{1, 1}, {1, 1}, {1, 1}});
  LpYolkResult lp = lp_yolk(dup);
  CHECK(lp.degenerate);
  CHECK(lp.ball.radius == 0.0);
  CHECK(lp.ball.center.x() == doctest::Approx(1.0));
  CHECK(lp.ball.center.y() == doctest::Approx(1.0));

  CHECK_THROWS_AS(lp_yolk(Electorate::from_points({{0, 0, 0}, {1, 1, 1}})),
                  Error);
}

TEST_CASE("every limiting line is within radius of the LP center") {
  for (int t = 0; t < 60; ++t) {
    Electorate e = random_electorate(34, static_cast<uint64_t>(t),
                                     random_size(34, static_cast<uint64_t>(t), 2, 9));
    LimitingLines lines = enumerate_limiting_median_lines(e);
    LpYolkResult lp = lp_yolk(e);
    for (const Hyperplane& h : lines.lines) {
      CHECK(point_hyperplane_distance(lp.ball.center, h) <=
            lp.ball.radius + 1e-7);
    }
    for (const Hyperplane& h : lp.active) {
      CHECK(std::abs(point_hyperplane_distance(lp.ball.center, h) -
                     lp.ball.radius) <= 1e-7);
    }
    if (!lp.degenerate && lp.ball.radius > 1e-12) CHECK(lp.active.size() >= 2);
  }
}

TEST_CASE("relaxing an active line never increases the optimum") {
  for (int t = 0; t < 30; ++t) {
    Electorate e = random_electorate(35, static_cast<uint64_t>(t),
                                     random_size(35, static_cast<uint64_t>(t), 3, 9));
    LimitingLines lines = enumerate_limiting_median_lines(e);
    if (lines.lines.size() < 2) continue;
    LpYolkResult lp = lp_yolk(e);
    if (lp.ball.radius < 1e-9) continue;
    for (const Hyperplane& active : lp.active) {
      std::vector<Hyperplane> relaxed = lines.lines;
      for (Hyperplane& h : relaxed) {
        if (!same_hyperplane(h, active, 1e-12)) continue;
        // Move the binding line toward the optimal center by 1e-4; the
        // relaxed program can only do as well or better.
        double s = signed_offset(h, lp.ball.center);
        h.offset += (s > 0.0 ? 1.0 : -1.0) * 1e-4;
      }
      Ball again = solve_minimax_lines(relaxed, 2);
      CHECK(again.radius <= lp.ball.radius + 1e-9);
    }
  }
}

TEST_CASE("oddr2ok LP radius approaches the closed form near pi/2") {
  // The constructed tangent ball is an upper bound; the gap to the true LP
  // optimum closes as alpha -> pi/2.
  for (double frac : {0.51, 0.505, 0.501}) {
    double alpha = frac * kPi;
    FamilyInstance fam = family_oddr2ok_kappa(alpha, 1.0, 1e-3);
    LpYolkResult lp = lp_yolk(fam.electorate);
    CHECK(lp.ball.radius <= fam.expected["lp_radius"] + 1e-9);
    CHECK(std::abs(lp.ball.radius - fam.expected["lp_radius"]) < 5e-3);
    CHECK(std::abs(lp.ball.center.y()) < 1e-9);
  }
}

TEST_CASE("3d lift: the zero-noise LP yolk is a point") {
  Electorate base = Electorate::from_points(
      {{0.1, 0.1}, {0.9, 0.2}, {0.5, 0.95}, {0.15, 0.7}, {0.8, 0.75}});
  FamilyInstance lifted = family_lift(base, 0.0, 99);
  std::vector<Hyperplane> planes =
      enumerate_limiting_median_planes3(lifted.electorate);
  REQUIRE(planes.size() == 1);
  LpYolkResult lp = lp_yolk_from_hyperplanes(planes, 3, centroid(lifted.electorate));
  CHECK(lp.ball.radius < 1e-12);

  // Noisy lift: several planes, small but positive radius, and the optimum
  // matches the reference.
  FamilyInstance noisy = family_lift(base, 0.02, 99);
  planes = enumerate_limiting_median_planes3(noisy.electorate);
  CHECK(planes.size() > 1);
  lp = lp_yolk_from_hyperplanes(planes, 3, centroid(noisy.electorate));
  LpReferenceResult ref = lp_reference(planes, 3);
  CHECK(std::abs(lp.ball.radius - ref.radius) < 1e-9);
  CHECK(lp.ball.radius < 0.05);
}
