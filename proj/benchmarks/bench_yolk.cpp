#include <benchmark/benchmark.h>

#include <cmath>

#include "yolkkit/constructions.hpp"
#include "yolkkit/lp_yolk.hpp"
#include "yolkkit/rng.hpp"
#include "yolkkit/yolk.hpp"

namespace {

using namespace yolkkit;

Electorate random_instance(uint64_t seed, int n) {
  SplitMix64 g(seed);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.emplace_back(g.uniform01(), g.uniform01());
  return Electorate::from_points(std::move(pts));
}

void BM_EnumerateLimitingLines(benchmark::State& state) {
  Electorate e = random_instance(7, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_limiting_median_lines(e));
  }
}
BENCHMARK(BM_EnumerateLimitingLines)->Arg(9)->Arg(33)->Arg(101);

void BM_LpYolk(benchmark::State& state) {
  Electorate e = random_instance(11, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lp_yolk(e));
  }
}
BENCHMARK(BM_LpYolk)->Arg(5)->Arg(9)->Arg(33);

void BM_MaxMedianDistance(benchmark::State& state) {
  Electorate e = random_instance(13, static_cast<int>(state.range(0)));
  Point c(0.5, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_median_distance(c, e));
  }
}
BENCHMARK(BM_MaxMedianDistance)->Arg(5)->Arg(9)->Arg(33);

void BM_Yolk(benchmark::State& state) {
  Electorate e = random_instance(17, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(yolk(e));
  }
}
BENCHMARK(BM_Yolk)->Arg(5)->Arg(9);

void BM_YolkNondegen(benchmark::State& state) {
  Electorate e = family_nondegen(0.1).electorate;
  for (auto _ : state) {
    benchmark::DoNotOptimize(yolk(e));
  }
}
BENCHMARK(BM_YolkNondegen);

void BM_YolkOddR2Ok(benchmark::State& state) {
  constexpr double kPi = 3.14159265358979323846;
  Electorate e = family_oddr2ok(0.55 * kPi, 3.0, 1e-3).electorate;
  for (auto _ : state) {
    benchmark::DoNotOptimize(yolk(e));
  }
}
BENCHMARK(BM_YolkOddR2Ok);

void BM_BruteForceYolk(benchmark::State& state) {
  Electorate e = random_instance(19, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_yolk(e, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BruteForceYolk)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
