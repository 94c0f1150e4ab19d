#include "experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "points_io.hpp"
#include "yolkkit/rng.hpp"

namespace yolkkit {

namespace {

SweepRow run_sweep_point(const SweepSpec& spec,
                         const std::map<std::string, double>& params,
                         const Electorate* base, const YolkOptions& opts) {
  SweepRow row;
  row.params = params;
  try {
    FamilyInstance fam;
    switch (spec.family) {
      case Family::nondegen:
        fam = family_nondegen(params.at("eps"));
        break;
      case Family::oddr2ok:
        fam = params.count("kappa")
                  ? family_oddr2ok_kappa(params.at("alpha"), params.at("kappa"),
                                         params.at("eps"))
                  : family_oddr2ok(params.at("alpha"), params.at("w"),
                                   params.at("eps"));
        break;
      case Family::oddr2far:
        fam = family_oddr2far(params.at("alpha"), params.at("kappa"),
                              params.at("eps"));
        break;
      case Family::lift:
        fam = family_lift(*base, params.at("noise"), spec.seed);
        break;
    }
    RunResult r = run_instance(fam.electorate, opts);
    row.lp_radius = r.lp.ball.radius;
    if (r.yolk) {
      row.yolk_radius = r.yolk->ball.radius;
      if (row.yolk_radius > 1e-12) row.ratio = row.lp_radius / row.yolk_radius;
    }
    if (r.center_distance) row.center_distance = *r.center_distance;
    if (fam.expected.count("lp_radius") && fam.expected.count("yolk_radius")) {
      row.expected_ratio =
          fam.expected.at("lp_radius") / fam.expected.at("yolk_radius");
      row.abs_error = std::abs(row.ratio - row.expected_ratio);
    }
    if (fam.expected.count("predicted_separation")) {
      row.predicted_separation = fam.expected.at("predicted_separation");
    }
  } catch (const Error& err) {
    row.error = err.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const YolkOptions& opts) {
  std::vector<std::map<std::string, double>> grid;
  switch (spec.family) {
    case Family::nondegen: {
      for (double eps : spec.eps) grid.push_back({{"eps", eps}});
      break;
    }
    case Family::oddr2ok:
    case Family::oddr2far: {
      std::vector<double> eps = spec.eps.empty() ? std::vector<double>{1e-3}
                                                 : spec.eps;
      for (double a : spec.alpha) {
        for (double ep : eps) {
          if (!spec.kappa.empty()) {
            for (double k : spec.kappa) {
              grid.push_back({{"alpha", a}, {"kappa", k}, {"eps", ep}});
            }
          } else {
            for (double w : spec.w) {
              grid.push_back({{"alpha", a}, {"w", w}, {"eps", ep}});
            }
          }
        }
      }
      break;
    }
    case Family::lift: {
      for (double nz : spec.noise) grid.push_back({{"noise", nz}});
      break;
    }
  }
  if (grid.empty()) {
    throw_error(ErrorCode::invalid_parameter, "sweep grid is empty");
  }

  Electorate base;
  const Electorate* base_ptr = nullptr;
  if (spec.family == Family::lift) {
    base = read_points_file(spec.base_path);
    base_ptr = &base;
  }

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const auto& params : grid) {
    rows.push_back(run_sweep_point(spec, params, base_ptr, opts));
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "family_param_alpha,family_param_w,family_param_kappa,family_param_eps,"
      "family_param_noise,lp_radius,yolk_radius,ratio,expected_ratio,"
      "abs_error,center_distance,predicted_separation,error\n";
  auto field = [](const std::map<std::string, double>& m, const char* k) {
    auto it = m.find(k);
    return it == m.end() ? std::string() : format_double(round12(it->second));
  };
  for (const SweepRow& r : rows) {
    out += field(r.params, "alpha") + ',' + field(r.params, "w") + ',' +
           field(r.params, "kappa") + ',' + field(r.params, "eps") + ',' +
           field(r.params, "noise") + ',';
    if (r.error.empty()) {
      out += format_double(round12(r.lp_radius)) + ',' +
             format_double(round12(r.yolk_radius)) + ',' +
             format_double(round12(r.ratio)) + ',' +
             format_double(round12(r.expected_ratio)) + ',' +
             format_double(round12(r.abs_error)) + ',' +
             format_double(round12(r.center_distance)) + ',' +
             format_double(round12(r.predicted_separation)) + ',';
    } else {
      std::string msg = r.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      out += ",,,,,,," + msg;
    }
    out += '\n';
  }
  return out;
}

Electorate montecarlo_electorate(const MonteCarloOptions& opts, int trial) {
  SplitMix64 g(SplitMix64::stream_seed(opts.seed, static_cast<uint64_t>(trial)));
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(opts.n_voters));
  for (int i = 0; i < opts.n_voters; ++i) {
    if (opts.dist == McDistribution::uniform) {
      pts.emplace_back(g.uniform01(), g.uniform01());
    } else {
      pts.emplace_back(g.normal(), g.normal());
    }
  }
  return Electorate::from_points(std::move(pts));
}

MonteCarloResult run_montecarlo(const MonteCarloOptions& opts) {
  if (opts.n_voters < 3) {
    throw_error(ErrorCode::invalid_parameter, "montecarlo requires n >= 3");
  }
  if (opts.trials < 1) {
    throw_error(ErrorCode::invalid_parameter, "montecarlo requires trials >= 1");
  }

  int threads = opts.threads;
  if (const char* env = std::getenv("YOLKKIT_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) threads = (threads > 0) ? std::min(threads, cap) : cap;
  }
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  threads = std::min(threads, opts.trials);

  MonteCarloResult mc;
  mc.rows.resize(static_cast<size_t>(opts.trials));

  std::atomic<int> next{0};
  auto worker = [&]() {
    while (true) {
      int t = next.fetch_add(1);
      if (t >= opts.trials) break;
      MonteCarloRow row;
      row.trial = t;
      try {
        Electorate e = montecarlo_electorate(opts, t);
        RunResult r = run_instance(e, opts.yolk);
        row.lp_radius = r.lp.ball.radius;
        row.yolk_radius = r.yolk->ball.radius;
        if (row.yolk_radius > 1e-12) {
          row.has_ratio = true;
          row.ratio = row.lp_radius / row.yolk_radius;
        }
        row.center_distance = r.center_distance.value_or(0.0);
        row.certified = r.yolk->certified;
        row.support_size = r.support_size.value_or(0);
        row.status = "ok";
      } catch (const ConvergenceError&) {
        row.status = "convergence_failure";
      } catch (const std::exception&) {
        row.status = "error";
      }
      mc.rows[static_cast<size_t>(t)] = std::move(row);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  MonteCarloSummary& s = mc.summary;
  s.trials = opts.trials;
  double sum = 0.0;
  int with_ratio = 0;
  bool first = true;
  for (const MonteCarloRow& row : mc.rows) {
    if (row.status != "ok") {
      ++s.aborted;
      continue;
    }
    ++s.completed;
    if (!row.certified) ++s.certificate_failures;
    if (!row.has_ratio) continue;
    sum += row.ratio;
    ++with_ratio;
    if (first) {
      s.min_ratio = s.max_ratio = row.ratio;
      first = false;
    } else {
      s.min_ratio = std::min(s.min_ratio, row.ratio);
      s.max_ratio = std::max(s.max_ratio, row.ratio);
    }
  }
  if (with_ratio > 0) sum /= with_ratio;
  s.mean_ratio = sum;
  return mc;
}

std::string montecarlo_csv(const MonteCarloResult& mc) {
  std::string out =
      "trial,lp_radius,yolk_radius,ratio,center_distance,certified,"
      "support_size,status\n";
  for (const MonteCarloRow& r : mc.rows) {
    out += std::to_string(r.trial) + ',';
    if (r.status == "ok") {
      out += format_double(round12(r.lp_radius)) + ',' +
             format_double(round12(r.yolk_radius)) + ',' +
             (r.has_ratio ? format_double(round12(r.ratio)) : std::string()) +
             ',' +
             format_double(round12(r.center_distance)) + ',' +
             (r.certified ? "1" : "0") + ',' + std::to_string(r.support_size);
    } else {
      out += ",,,,,";
    }
    out += ',' + r.status + '\n';
  }
  return out;
}

ordered_json montecarlo_summary_json(const MonteCarloOptions& opts,
                                     const MonteCarloResult& mc) {
  ordered_json j;
  j["schema"] = "yolkkit.montecarlo.v1";
  j["n_voters"] = opts.n_voters;
  j["trials"] = mc.summary.trials;
  j["distribution"] =
      opts.dist == McDistribution::uniform ? "uniform" : "normal";
  j["seed"] = opts.seed;
  j["completed"] = mc.summary.completed;
  j["aborted"] = mc.summary.aborted;
  j["certificate_failures"] = mc.summary.certificate_failures;
  j["min_ratio"] = round12(mc.summary.min_ratio);
  j["mean_ratio"] = round12(mc.summary.mean_ratio);
  j["max_ratio"] = round12(mc.summary.max_ratio);
  return j;
}

}  // namespace yolkkit
