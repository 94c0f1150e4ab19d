#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pipeline.hpp"

namespace yolkkit {

/// One grid point of a parameter sweep. `error` is non-empty when the row
/// failed; the sweep continues past failed rows.
struct SweepRow {
  std::map<std::string, double> params;
  double lp_radius = 0.0;
  double yolk_radius = 0.0;
  double ratio = 0.0;
  double expected_ratio = 0.0;
  double abs_error = 0.0;
  double center_distance = 0.0;
  double predicted_separation = 0.0;
  std::string error;
};

struct SweepSpec {
  Family family = Family::oddr2ok;
  std::vector<double> alpha;  // oddr2ok / oddr2far
  std::vector<double> kappa;  // optional; overrides w
  std::vector<double> w;
  std::vector<double> eps;    // nondegen eps, or the oddr2ok coordinate eps
  std::vector<double> noise;  // lift
  std::string base_path;      // lift
  uint64_t seed = 0;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const YolkOptions& opts);
std::string sweep_csv(const std::vector<SweepRow>& rows);

enum class McDistribution { uniform, normal };

struct MonteCarloOptions {
  int n_voters = 5;
  int trials = 100;
  McDistribution dist = McDistribution::uniform;
  uint64_t seed = 0;
  int threads = 0;  // 0 = auto (bounded by YOLKKIT_THREADS when set)
  YolkOptions yolk;
};

struct MonteCarloRow {
  int trial = 0;
  double lp_radius = 0.0;
  double yolk_radius = 0.0;
  bool has_ratio = false;  // false when the yolk degenerates to a point
  double ratio = 0.0;
  double center_distance = 0.0;
  bool certified = false;
  int support_size = 0;
  std::string status;  // "ok", "convergence_failure", or "error"
};

struct MonteCarloSummary {
  int trials = 0;
  int completed = 0;
  int aborted = 0;
  int certificate_failures = 0;
  double min_ratio = 0.0;
  double mean_ratio = 0.0;
  double max_ratio = 0.0;
};

struct MonteCarloResult {
  std::vector<MonteCarloRow> rows;  // sorted by trial index
  MonteCarloSummary summary;
};

/// Per-trial streams are derived from (seed, trial), so results do not
/// depend on thread scheduling. The YOLKKIT_THREADS environment variable
/// caps concurrency (0 = auto).
MonteCarloResult run_montecarlo(const MonteCarloOptions& opts);
Electorate montecarlo_electorate(const MonteCarloOptions& opts, int trial);

std::string montecarlo_csv(const MonteCarloResult& mc);
ordered_json montecarlo_summary_json(const MonteCarloOptions& opts,
                                     const MonteCarloResult& mc);

}  // namespace yolkkit
