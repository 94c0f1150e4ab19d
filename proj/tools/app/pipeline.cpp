#include "pipeline.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "points_io.hpp"

namespace yolkkit {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ordered_json ball_json(const Ball& b) {
  ordered_json j;
  ordered_json center = ordered_json::array();
  for (int i = 0; i < b.center.dim(); ++i) center.push_back(round12(b.center[i]));
  j["center"] = center;
  j["radius"] = round12(b.radius);
  return j;
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

RunResult run_instance(const Electorate& e, const YolkOptions& opts) {
  RunResult r;
  r.digest = instance_digest(e);
  r.dim = e.dim;
  r.n_points = e.size();

  auto t0 = Clock::now();
  if (e.dim == 2) {
    LimitingLines lines = enumerate_limiting_median_lines(e);
    r.limiting_count = static_cast<int>(lines.lines.size());
    r.timings.enumerate_ms = elapsed_ms(t0);

    t0 = Clock::now();
    r.lp = lines.degenerate
               ? LpYolkResult{Ball{centroid(e), 0.0}, {}, true}
               : lp_yolk_from_hyperplanes(lines.lines, 2, centroid(e));
    r.timings.lp_ms = elapsed_ms(t0);

    t0 = Clock::now();
    r.yolk = yolk(e, opts);  // ConvergenceError propagates to the caller
    r.timings.yolk_ms = elapsed_ms(t0);

    t0 = Clock::now();
    const YolkResult& y = *r.yolk;
    if (y.ball.radius > 1e-12) {
      r.ratio = r.lp.ball.radius / y.ball.radius;
    }
    r.center_distance = distance(r.lp.ball.center, y.ball.center);
    if (y.ball.radius > 1e-12 && !y.tangent_directions.empty()) {
      std::vector<Hyperplane> tangents;
      tangents.reserve(y.tangent_directions.size());
      for (const Direction& d : y.tangent_directions) {
        tangents.push_back(tangent_hyperplane(y.ball, d));
      }
      CoverCertificate cert = hemisphere_cover(y.ball, tangents);
      r.certificate = cert;
      if (cert.covered) {
        r.support_size =
            static_cast<int>(minimal_support(y.ball, tangents).hyperplanes.size());
      }
    }
    r.timings.certify_ms = elapsed_ms(t0);
  } else if (e.dim == 3) {
    // Only the LP side is defined in three dimensions (lift instances).
    std::vector<Hyperplane> planes = enumerate_limiting_median_planes3(e);
    r.limiting_count = static_cast<int>(planes.size());
    r.timings.enumerate_ms = elapsed_ms(t0);
    t0 = Clock::now();
    r.lp = lp_yolk_from_hyperplanes(planes, 3, centroid(e));
    r.timings.lp_ms = elapsed_ms(t0);
  } else {
    throw_error(ErrorCode::unsupported_dimension,
                "run_instance supports k in {2, 3}");
  }
  return r;
}

ordered_json run_result_to_json(const RunResult& r) {
  ordered_json j;
  j["schema"] = "yolkkit.run.v1";
  char digest[20];
  std::snprintf(digest, sizeof(digest), "%016llx",
                static_cast<unsigned long long>(r.digest));
  j["digest"] = digest;
  j["dimension"] = r.dim;
  j["n_points"] = r.n_points;
  j["limiting_count"] = r.limiting_count;

  ordered_json lp = ball_json(r.lp.ball);
  lp["degenerate"] = r.lp.degenerate;
  lp["active_count"] = static_cast<int>(r.lp.active.size());
  j["lp_yolk"] = lp;

  if (r.yolk) {
    ordered_json y = ball_json(r.yolk->ball);
    y["certified"] = r.yolk->certified;
    y["iterations"] = r.yolk->iterations;
    y["tangent_count"] = static_cast<int>(r.yolk->tangent_directions.size());
    j["yolk"] = y;
  } else {
    j["yolk"] = nullptr;
  }
  j["ratio"] = r.ratio ? ordered_json(round12(*r.ratio)) : ordered_json(nullptr);
  j["center_distance"] = r.center_distance
                             ? ordered_json(round12(*r.center_distance))
                             : ordered_json(nullptr);
  if (r.certificate) {
    ordered_json c;
    c["covered"] = r.certificate->covered;
    c["max_gap"] = round12(r.certificate->max_gap);
    c["tangent_count"] = static_cast<int>(r.certificate->tangent_directions.size());
    j["certificate"] = c;
  } else {
    j["certificate"] = nullptr;
  }
  j["support_size"] =
      r.support_size ? ordered_json(*r.support_size) : ordered_json(nullptr);

  ordered_json t;
  t["enumerate"] = round12(r.timings.enumerate_ms);
  t["lp"] = round12(r.timings.lp_ms);
  t["yolk"] = round12(r.timings.yolk_ms);
  t["certify"] = round12(r.timings.certify_ms);
  j["timings_ms"] = t;
  return j;
}

std::string run_result_to_csv(const RunResult& r) {
  std::string out =
      "digest,dimension,n_points,limiting_count,lp_radius,lp_center_x,"
      "lp_center_y,lp_degenerate,yolk_radius,yolk_center_x,yolk_center_y,"
      "certified,ratio,center_distance,max_gap,support_size\n";
  char digest[20];
  std::snprintf(digest, sizeof(digest), "%016llx",
                static_cast<unsigned long long>(r.digest));
  out += digest;
  out += ',' + std::to_string(r.dim) + ',' + std::to_string(r.n_points) + ',' +
         std::to_string(r.limiting_count);
  out += ',' + format_double(round12(r.lp.ball.radius));
  out += ',' + format_double(round12(r.lp.ball.center[0]));
  out += ',' + format_double(round12(r.lp.ball.center[1]));
  out += r.lp.degenerate ? ",1" : ",0";
  if (r.yolk) {
    out += ',' + format_double(round12(r.yolk->ball.radius));
    out += ',' + format_double(round12(r.yolk->ball.center.x()));
    out += ',' + format_double(round12(r.yolk->ball.center.y()));
    out += r.yolk->certified ? ",1" : ",0";
  } else {
    out += ",,,,";
  }
  out += ',';
  if (r.ratio) out += format_double(round12(*r.ratio));
  out += ',';
  if (r.center_distance) out += format_double(round12(*r.center_distance));
  out += ',';
  if (r.certificate) out += format_double(round12(r.certificate->max_gap));
  out += ',';
  if (r.support_size) out += std::to_string(*r.support_size);
  out += '\n';
  return out;
}

ordered_json family_expected_json(const FamilyInstance& fam) {
  ordered_json j;
  j["schema"] = "yolkkit.expected.v1";
  j["family"] = family_name(fam.family);
  ordered_json params;
  for (const auto& [k, v] : fam.parameters) params[k] = round12(v);
  j["parameters"] = params;
  ordered_json expected;
  for (const auto& [k, v] : fam.expected) expected[k] = round12(v);
  j["expected"] = expected;
  return j;
}

}  // namespace yolkkit
