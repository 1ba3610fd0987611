#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "skewnet/net.hpp"
#include "skewnet/options.hpp"
#include "skewnet/verdict.hpp"

namespace skewnet {

inline constexpr const char* kReportSchema = "skewnet-report/1";

struct CheckResult {
  std::string name;
  Status status = Status::Inconclusive;
  std::string witness;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  std::string text;  // human-readable detail (tables)
  double seconds = 0;
};

struct PipelineReport {
  std::string fingerprint;
  nlohmann::ordered_json options;
  std::vector<CheckResult> checks;
  Status overall = Status::Inconclusive;
  std::string stopped_after;  // empty when every stage ran

  nlohmann::ordered_json to_json(bool timings = false) const;
};

/// Every check name in pipeline order.
const std::vector<std::string>& check_names();

/// Runs one named check (and whatever it depends on). Throws
/// std::invalid_argument for an unknown name.
CheckResult run_check(const std::string& name, const ANet& net, const Options& opts = {});

/// All checks in order. Stops with fail after an irregular net; checks that
/// need a smooth net are recorded inconclusive when Y is singular.
PipelineReport run_pipeline(const ANet& net, const Options& opts = {});

/// 0 pass, 1 fail, 2 inconclusive.
int exit_code(Status s);

struct ReportDiff {
  std::vector<std::string> differences;  // JSON pointers with both values
  bool identical() const { return differences.empty(); }
};
/// Structural comparison; "seconds" and "timings" members are ignored.
ReportDiff diff_reports(const nlohmann::json& a, const nlohmann::json& b);

nlohmann::ordered_json options_json(const Options& opts);

}  // namespace skewnet
