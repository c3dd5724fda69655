#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace spindle {

// One verified claim. `statement` is the checked inequality or identity,
// in 1:1 correspondence with the claim id. Calibrated-constant checks that
// have no exact reference value are reported as informational, never as
// pass.
struct ClaimResult {
  enum class Verdict { pass, fail, informational };
  std::string id;
  std::string statement;
  std::string inputs_digest;
  double tolerance = 0.0;
  Verdict verdict = Verdict::fail;
  std::vector<std::pair<std::string, double>> values;  // ordered, append-only
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  int config_version = 0;
  std::vector<ClaimResult> claims;

  int failures() const;
  void append(ClaimResult c) { claims.push_back(std::move(c)); }
};

// Suite grids live in config/suites.json, not in code.
struct SuiteConfig {
  nlohmann::json data;
  int version() const { return data.value("version", 0); }
};

SuiteConfig load_suite_config(const std::string& path);

Report run_theorem_iso_suite(const SuiteConfig& cfg, std::uint64_t seed);
Report run_faber_krahn_suite(const SuiteConfig& cfg, std::uint64_t seed);
Report run_lemma_suite(const SuiteConfig& cfg, std::uint64_t seed);
Report run_all_suites(const SuiteConfig& cfg, std::uint64_t seed);

// Deterministic writers: fixed key order, 17 significant digits in JSON,
// 12 in CSV. Same seed and config give byte-identical output.
void write_report_json(const Report& report, std::ostream& out);
void write_report_csv(const Report& report, std::ostream& out);

}  // namespace spindle
