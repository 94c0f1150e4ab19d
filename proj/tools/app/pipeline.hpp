#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "yolkkit/certify.hpp"
#include "yolkkit/constructions.hpp"
#include "yolkkit/lp_yolk.hpp"
#include "yolkkit/yolk.hpp"

namespace yolkkit {

using ordered_json = nlohmann::ordered_json;

struct StageTimings {
  double enumerate_ms = 0.0;
  double lp_ms = 0.0;
  double yolk_ms = 0.0;
  double certify_ms = 0.0;
};

/// One full computation over an electorate: LP yolk, yolk (planar only),
/// optimality certificate, and support set.
struct RunResult {
  uint64_t digest = 0;
  int dim = 0;
  int n_points = 0;
  int limiting_count = 0;
  LpYolkResult lp;
  std::optional<YolkResult> yolk;
  std::optional<double> ratio;            // lp radius / yolk radius
  std::optional<double> center_distance;  // |lp center - yolk center|
  std::optional<CoverCertificate> certificate;
  std::optional<int> support_size;
  StageTimings timings;
};

RunResult run_instance(const Electorate& e, const YolkOptions& opts = {});

/// Rounds to 12 significant digits so emitted documents are byte-stable.
double round12(double v);

ordered_json run_result_to_json(const RunResult& r);
std::string run_result_to_csv(const RunResult& r);

/// Sidecar document of a generated family's closed-form expected values.
ordered_json family_expected_json(const FamilyInstance& fam);

std::string format_double(double v);  // %.12g

}  // namespace yolkkit
