// yolkkit command-line tool: compute yolks and LP yolks, generate the
// worst-case example families, run parameter sweeps and Monte Carlo
// experiments, and render instances to SVG.
//
// Exit codes: 0 success, 2 input parse error, 3 convergence failure,
// 4 usage error.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "app/experiments.hpp"
#include "app/pipeline.hpp"
#include "app/points_io.hpp"
#include "app/svg.hpp"

namespace {

using namespace yolkkit;

std::vector<double> parse_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) {
      throw Error(ErrorCode::invalid_parameter, "bad number '" + tok + "'");
    }
    out.push_back(v);
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::invalid_parameter,
                "cannot write output file '" + out_path + "'");
  }
  out << text;
}

FamilyInstance make_family(Family family, double eps, double alpha, double w,
                           double kappa, double noise,
                           const std::string& base_path, uint64_t seed) {
  switch (family) {
    case Family::nondegen:
      return family_nondegen(eps);
    case Family::oddr2ok:
      return kappa > 0.0 ? family_oddr2ok_kappa(alpha, kappa, eps)
                         : family_oddr2ok(alpha, w, eps);
    case Family::oddr2far:
      return family_oddr2far(alpha, kappa, eps);
    case Family::lift: {
      if (base_path.empty()) {
        throw Error(ErrorCode::invalid_parameter,
                    "lift family requires --base <points file>");
      }
      Electorate base = read_points_file(base_path);
      return family_lift(base, noise, seed);
    }
  }
  throw Error(ErrorCode::invalid_parameter, "unknown family");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"yolkkit: yolks, LP yolks, and optimality certificates for "
               "finite electorates of ideal points"};
  app.require_subcommand(0, 1);
  app.fallthrough(true);

  std::string out_path;
  std::string format = "json";
  double tol = 1e-6;
  int max_iter = 100000;
  uint64_t seed = 0;
  app.add_option("--out", out_path, "Output path (default: stdout)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol", tol, "Certificate tolerance (default 1e-6)");
  app.add_option("--max-iter", max_iter,
                 "Yolk iteration cap (default 100000)");
  app.add_option("--seed", seed, "Random seed for generators and trials");

  std::function<int()> action;

  // compute
  {
    auto* cmd = app.add_subcommand(
        "compute", "Compute the yolk, LP yolk, and certificate for a points file");
    auto input = std::make_shared<std::string>();
    cmd->add_option("input", *input, "Points file")->required();
    cmd->callback([&, input]() {
      action = [&, input]() {
        Electorate e = read_points_file(*input);
        RunResult r = run_instance(e, YolkOptions{tol, max_iter});
        if (format == "csv") {
          emit(run_result_to_csv(r), out_path);
        } else {
          emit(run_result_to_json(r).dump(2) + "\n", out_path);
        }
        return 0;
      };
    });
  }

  // certify
  {
    auto* cmd = app.add_subcommand(
        "certify", "Report the hemisphere-cover certificate and support set");
    auto input = std::make_shared<std::string>();
    cmd->add_option("input", *input, "Points file")->required();
    cmd->callback([&, input]() {
      action = [&, input]() {
        Electorate e = read_points_file(*input);
        RunResult r = run_instance(e, YolkOptions{tol, max_iter});
        ordered_json j;
        j["schema"] = "yolkkit.certify.v1";
        char digest[20];
        std::snprintf(digest, sizeof(digest), "%016llx",
                      static_cast<unsigned long long>(r.digest));
        j["digest"] = digest;
        if (r.yolk) {
          ordered_json y;
          ordered_json center = ordered_json::array();
          center.push_back(round12(r.yolk->ball.center.x()));
          center.push_back(round12(r.yolk->ball.center.y()));
          y["center"] = center;
          y["radius"] = round12(r.yolk->ball.radius);
          y["certified"] = r.yolk->certified;
          j["yolk"] = y;
        } else {
          j["yolk"] = nullptr;
        }
        if (r.certificate) {
          ordered_json c;
          c["covered"] = r.certificate->covered;
          c["max_gap"] = round12(r.certificate->max_gap);
          ordered_json angles = ordered_json::array();
          for (const Direction& d : r.certificate->tangent_directions) {
            angles.push_back(round12(d.angle()));
          }
          c["tangent_angles"] = angles;
          j["certificate"] = c;
        } else {
          j["certificate"] = nullptr;
        }
        if (r.yolk && r.yolk->ball.radius > 1e-12 && r.certificate &&
            r.certificate->covered) {
          std::vector<Hyperplane> tangents;
          for (const Direction& d : r.yolk->tangent_directions) {
            tangents.push_back(tangent_hyperplane(r.yolk->ball, d));
          }
          SupportSet sup = minimal_support(r.yolk->ball, tangents);
          ordered_json s = ordered_json::array();
          for (const Hyperplane& h : sup.hyperplanes) {
            ordered_json hj;
            ordered_json normal = ordered_json::array();
            normal.push_back(round12(h.normal[0]));
            normal.push_back(round12(h.normal[1]));
            hj["normal"] = normal;
            hj["offset"] = round12(h.offset);
            s.push_back(hj);
          }
          j["support"] = s;
        } else {
          j["support"] = nullptr;
        }
        emit(j.dump(2) + "\n", out_path);
        return 0;
      };
    });
  }

  // generate
  {
    auto* cmd = app.add_subcommand(
        "generate", "Generate an example family instance and its expected values");
    struct Gen {
      std::string family;
      double eps = 0.5, alpha = 0.0, w = 0.0, kappa = 0.0, noise = 0.0;
      std::string base;
    };
    auto gen = std::make_shared<Gen>();
    cmd->add_option("family", gen->family, "nondegen | oddr2ok | lift | oddr2far")
        ->required();
    cmd->add_option("--eps", gen->eps, "Family eps parameter");
    cmd->add_option("--alpha", gen->alpha, "Tangency angle in radians");
    cmd->add_option("--w", gen->w, "x-coordinate of the outer points");
    cmd->add_option("--kappa", gen->kappa, "Sets w = -kappa / cos(alpha)");
    cmd->add_option("--noise", gen->noise, "Lift noise half-width");
    cmd->add_option("--base", gen->base, "Base points file for the lift family");
    cmd->callback([&, gen]() {
      action = [&, gen]() {
        if (out_path.empty()) {
          throw Error(ErrorCode::invalid_parameter,
                      "generate requires --out <points file>");
        }
        FamilyInstance fam =
            make_family(parse_family(gen->family), gen->eps, gen->alpha, gen->w,
                        gen->kappa, gen->noise, gen->base, seed);
        std::string comment = std::string(family_name(fam.family)) + " family";
        write_points_file(out_path, fam.electorate, comment);
        std::ofstream sidecar(out_path + ".expected.json", std::ios::binary);
        sidecar << family_expected_json(fam).dump(2) << "\n";
        return 0;
      };
    });
  }

  // sweep
  {
    auto* cmd = app.add_subcommand(
        "sweep", "Run a parameter sweep over a family and emit CSV rows");
    struct Sw {
      std::string family;
      std::string alpha, kappa, w, eps, noise;
      std::string base;
    };
    auto sw = std::make_shared<Sw>();
    cmd->add_option("--family", sw->family, "Family to sweep")->required();
    cmd->add_option("--alpha", sw->alpha, "Comma-separated alpha values");
    cmd->add_option("--kappa", sw->kappa, "Comma-separated kappa values");
    cmd->add_option("--w", sw->w, "Comma-separated w values");
    cmd->add_option("--eps", sw->eps, "Comma-separated eps values");
    cmd->add_option("--noise", sw->noise, "Comma-separated lift noise values");
    cmd->add_option("--base", sw->base, "Base points file for the lift family");
    cmd->callback([&, sw]() {
      action = [&, sw]() {
        SweepSpec spec;
        spec.family = parse_family(sw->family);
        spec.alpha = parse_list(sw->alpha);
        spec.kappa = parse_list(sw->kappa);
        spec.w = parse_list(sw->w);
        spec.eps = parse_list(sw->eps);
        spec.noise = parse_list(sw->noise);
        spec.base_path = sw->base;
        spec.seed = seed;
        std::vector<SweepRow> rows =
            run_sweep(spec, YolkOptions{tol, max_iter});
        emit(sweep_csv(rows), out_path);
        return 0;
      };
    });
  }

  // montecarlo
  {
    auto* cmd = app.add_subcommand(
        "montecarlo",
        "Sample random electorates and summarize LP-yolk/yolk ratios");
    struct Mc {
      int n = 5, trials = 100, threads = 0;
      std::string dist = "uniform";
    };
    auto mc = std::make_shared<Mc>();
    cmd->add_option("--n", mc->n, "Voters per trial (>= 3)")->required();
    cmd->add_option("--trials", mc->trials, "Number of trials")->required();
    cmd->add_option("--dist", mc->dist, "uniform | normal")
        ->check(CLI::IsMember({"uniform", "normal"}));
    cmd->add_option("--threads", mc->threads,
                    "Worker threads (0 = auto, capped by YOLKKIT_THREADS)");
    cmd->callback([&, mc]() {
      action = [&, mc]() {
        MonteCarloOptions opts;
        opts.n_voters = mc->n;
        opts.trials = mc->trials;
        opts.dist = mc->dist == "normal" ? McDistribution::normal
                                         : McDistribution::uniform;
        opts.seed = seed;
        opts.threads = mc->threads;
        opts.yolk = YolkOptions{tol, max_iter};
        MonteCarloResult result = run_montecarlo(opts);
        std::cout << montecarlo_summary_json(opts, result).dump(2) << "\n";
        if (!out_path.empty()) emit(montecarlo_csv(result), out_path);
        bool any_ratio = false;
        for (const MonteCarloRow& row : result.rows) {
          if (row.has_ratio) any_ratio = true;
        }
        if (opts.n_voters % 2 == 1 && any_ratio &&
            result.summary.min_ratio < 0.5 - 1e-5) {
          std::cerr << "error: odd-electorate ratio bound violated: min ratio "
                    << result.summary.min_ratio << "\n";
          return 1;
        }
        return 0;
      };
    });
  }

  // plot
  {
    auto* cmd = app.add_subcommand("plot", "Render a points file to SVG");
    auto input = std::make_shared<std::string>();
    cmd->add_option("input", *input, "Points file")->required();
    cmd->callback([&, input]() {
      action = [&, input]() {
        Electorate e = read_points_file(*input);
        RunResult r = run_instance(e, YolkOptions{tol, max_iter});
        emit(render_instance_svg(e, r), out_path);
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 4;
  }

  if (!action) {
    std::cerr << app.help() << "\n";
    return 4;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::invalid_parameter ? 4 : 1;
  }
}
