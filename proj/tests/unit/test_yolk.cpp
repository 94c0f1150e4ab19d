#include <doctest.h>

#include <cmath>

#include "support/instances.hpp"
#include "support/oracles.hpp"
#include "yolkkit/constructions.hpp"
#include "yolkkit/yolk.hpp"

using namespace yolkkit;
using namespace yolkkit::testing;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("max_median_distance on known configurations") {
  Electorate nd = family_nondegen(0.5).electorate;
  SweepEvaluation ev = max_median_distance(Point(0.0, 0.0), nd);
  CHECK(ev.value == doctest::Approx(1.0).epsilon(1e-12));
  // Achieved along the x-direction slab [-1, 1].
  CHECK(std::abs(ev.argmax_direction.unit[1]) < 1e-9);
  CHECK(ev.argmax_slab.b_lo == doctest::Approx(-1.0));
  CHECK(ev.argmax_slab.b_hi == doctest::Approx(1.0));

  Electorate line = Electorate::from_points({{0, 0}, {1, 0}, {2, 0}});
  CHECK(max_median_distance(Point(1.0, 0.0), line).value < 1e-12);
}

TEST_CASE("sweep value agrees with dense direction sampling") {
  for (int t = 0; t < 25; ++t) {
    Electorate e = random_electorate(41, static_cast<uint64_t>(t), 5);
    SplitMix64 g(SplitMix64::stream_seed(42, static_cast<uint64_t>(t)));
    Point c(g.uniform(-1, 2), g.uniform(-1, 2));
    double exact = max_median_distance(c, e).value;
    double dense = dense_max_median_distance(c, e, 200000);
    CHECK(exact >= dense - 1e-12);  // sampling can only miss the max
    CHECK(exact == doctest::Approx(dense).epsilon(1e-6));
  }
}

TEST_CASE("f is convex") {
  for (int t = 0; t < 100; ++t) {
    Electorate e = random_electorate(43, static_cast<uint64_t>(t),
                                     random_size(43, static_cast<uint64_t>(t), 3, 9));
    SplitMix64 g(SplitMix64::stream_seed(44, static_cast<uint64_t>(t)));
    Point c1(g.uniform(-2, 2), g.uniform(-2, 2));
    Point c2(g.uniform(-2, 2), g.uniform(-2, 2));
    Point mid(0.5 * (c1.x() + c2.x()), 0.5 * (c1.y() + c2.y()));
    double f1 = max_median_distance(c1, e).value;
    double f2 = max_median_distance(c2, e).value;
    double fm = max_median_distance(mid, e).value;
    CHECK(fm <= 0.5 * (f1 + f2) + 1e-9);
  }
}

TEST_CASE("yolk of the worst-case families") {
  YolkResult y = yolk(family_nondegen(0.5).electorate);
  CHECK(y.certified);
  CHECK(y.ball.radius == doctest::Approx(1.0).epsilon(1e-9));

  y = yolk(family_oddr2ok(0.55 * kPi, 3.0, 1e-3).electorate);
  CHECK(y.certified);
  CHECK(y.ball.radius == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(y.ball.center.x()) < 1e-6);
  CHECK(std::abs(y.ball.center.y()) < 1e-6);
  CHECK(y.tangent_directions.size() >= 3);
}

TEST_CASE("yolk degenerate cases") {
  Electorate line = Electorate::from_points({{0, 0}, {1, 0}, {2, 0}});
  YolkResult y = yolk(line);
  CHECK(y.certified);
  CHECK(y.ball.radius < 1e-9);
  CHECK(y.ball.center.x() == doctest::Approx(1.0).epsilon(1e-6));

  Electorate single = Electorate::from_points({{0.3, 0.7}});
  y = yolk(single);
  CHECK(y.ball.radius < 1e-12);
  CHECK(y.ball.center.x() == doctest::Approx(0.3));

  // Two points: the perpendicular slab forces half the separation.
  Electorate two = Electorate::from_points({{0, 0}, {1, 0}});
  y = yolk(two);
  CHECK(y.ball.radius == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(y.ball.center.x() == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("yolk of the equilateral triangle is the incircle") {
  Point A(0, 0), B(1, 0), C(0.5, std::sqrt(3.0) / 2.0);
  YolkResult y = yolk(Electorate::from_points({A, B, C}));
  Ball oracle = incircle_of_triangle(A, B, C);
  CHECK(y.ball.radius == doctest::Approx(oracle.radius).epsilon(1e-9));
  CHECK(y.ball.radius ==
        doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-9));
  CHECK(distance(y.ball.center, oracle.center) < 1e-7);
}

TEST_CASE("sandwich: lp radius never exceeds the yolk radius") {
  for (int t = 0; t < 60; ++t) {
    Electorate e = random_electorate(45, static_cast<uint64_t>(t),
                                     random_size(45, static_cast<uint64_t>(t), 2, 9));
    YolkResult y = yolk(e);
    LpYolkResult lp = lp_yolk(e);
    CHECK(lp.ball.radius <= y.ball.radius + 1e-6);
  }
}

TEST_CASE("similarity equivariance") {
  for (int t = 0; t < 10; ++t) {
    Electorate e = random_electorate(46, static_cast<uint64_t>(t),
                                     random_odd_size(46, static_cast<uint64_t>(t), 7));
    SplitMix64 g(SplitMix64::stream_seed(47, static_cast<uint64_t>(t)));
    double s = g.uniform(0.5, 2.0);
    double rot = g.uniform(0.0, 2.0 * kPi);
    double tx = g.uniform(-3, 3), ty = g.uniform(-3, 3);
    double cr = std::cos(rot), sr = std::sin(rot);
    std::vector<Point> mapped;
    for (const Point& p : e.points) {
      mapped.emplace_back(s * (cr * p.x() - sr * p.y()) + tx,
                          s * (sr * p.x() + cr * p.y()) + ty);
    }
    YolkResult y0 = yolk(e);
    YolkResult y1 = yolk(Electorate::from_points(mapped));
    CHECK(y1.ball.radius == doctest::Approx(s * y0.ball.radius).epsilon(1e-6));
    double ex = s * (cr * y0.ball.center.x() - sr * y0.ball.center.y()) + tx;
    double ey = s * (sr * y0.ball.center.x() + cr * y0.ball.center.y()) + ty;
    CHECK(std::abs(y1.ball.center.x() - ex) < 1e-6);
    CHECK(std::abs(y1.ball.center.y() - ey) < 1e-6);
  }
}

TEST_CASE("tangency points of non-limiting tangents are ideal points") {
  for (int t = 0; t < 40; ++t) {
    Electorate e = random_electorate(48, static_cast<uint64_t>(t),
                                     random_odd_size(48, static_cast<uint64_t>(t), 9));
    YolkResult y = yolk(e);
    if (!y.certified || y.ball.radius < 1e-9) continue;
    for (const Direction& d : y.tangent_directions) {
      Hyperplane h = tangent_hyperplane(y.ball, d);
      double d1 = 1e18, d2 = 1e18;
      const Point* nearest = nullptr;
      for (const Point& p : e.points) {
        double dist = point_hyperplane_distance(p, h);
        if (dist < d1) {
          d2 = d1;
          d1 = dist;
          nearest = &p;
        } else if (dist < d2) {
          d2 = dist;
        }
      }
      // Exact non-limiting tangents only (see the acceptance suite for
      // the window geometry).
      if (!(d1 < 1e-12 && d2 > 1e-4)) continue;
      Point touch(y.ball.center.x() + y.ball.radius * d.unit[0],
                  y.ball.center.y() + y.ball.radius * d.unit[1]);
      CHECK(distance(touch, *nearest) < 1e-6);
    }
  }
}

TEST_CASE("brute force oracle agrees with the solver") {
  GridSpec grid;
  for (int t = 0; t < 12; ++t) {
    Electorate e = random_electorate(49, static_cast<uint64_t>(t),
                                     random_size(49, static_cast<uint64_t>(t), 2, 9));
    YolkResult y = yolk(e);
    Ball bf = brute_force_yolk(e, 50000, grid);
    CHECK(std::abs(bf.radius - y.ball.radius) < 1e-3);
    CHECK(bf.radius >= y.ball.radius - 1e-6);  // grid value upper-bounds
  }
  // Single point collapses to that point.
  Ball bf = brute_force_yolk(Electorate::from_points({{0.4, -0.2}}), 1000, grid);
  CHECK(bf.radius < 1e-9);
  CHECK(bf.center.x() == doctest::Approx(0.4).epsilon(1e-6));

  CHECK_THROWS_AS(brute_force_yolk(Electorate::from_points({{0, 0}}), 10, grid),
                  Error);
}

TEST_CASE("yolk determinism") {
  Electorate e = random_electorate(50, 0, 7);
  YolkResult a = yolk(e);
  YolkResult b = yolk(e);
  CHECK(a.ball.radius == b.ball.radius);
  CHECK(a.ball.center.x() == b.ball.center.x());
  CHECK(a.ball.center.y() == b.ball.center.y());
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("brute force confirms the unit yolk of the tangent construction") {
  Electorate e = family_oddr2ok(0.55 * kPi, 3.0, 1e-3).electorate;
  Ball bf = brute_force_yolk(e, 50000, {});
  CHECK(bf.radius == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("flat valleys straddling the direction wrap still certify") {
  // Near-collinear quadruple whose balancing family sits at theta ~ 0: the
  // two slab entries then carry opposite line orientations across the 0/pi
  // wrap, which the midpoint snap must classify by outward normal.
  Electorate e = Electorate::from_points(
      {{-0.48319842109357758, -4.2042068868821509e-08},
       {-3.2312617362620588, 3.1883584979490976e-08},
       {-4.8578532171971816, 5.2132047451025032e-08},
       {3.0886044752716852, -1.0144300436907172e-07}});
  YolkResult y = yolk(e);
  CHECK(y.certified);
  // Half the gap between the two middle points.
  CHECK(y.ball.radius == doctest::Approx(1.3740316575842).epsilon(1e-9));
  CHECK(y.ball.center.x() == doctest::Approx(-1.85723007867782).epsilon(1e-9));
}
