#pragma once
// Configuration-driven experiments. A config names a model (inner function,
// generator list, catalog fixture or the Riesz model), a truncation order and
// horizon, and a list of checks; the runner builds submodule, quotient,
// triple and iterate system on demand and writes one JSON report per check
// plus a summary.
//
// Config schema (JSON object):
//   name        string, default "experiment"
//   order       [N1, N2]                                    required
//   fixture     catalog name                                one of these three
//   inner       inner spec object or monomial string ("zw", "z^2w", "1")
//   generators  list of polynomial objects or monomial strings
//   horizon     [L1, L2], default = order
//   seed        integer, default 0
//   transport   {seed, condition_cap (default 1e3), count (default 1)}
//   trials      random test vectors per check, default 20
//   orders      list of [N1, N2] for the codimension check
//   expect      {"mandrekar": bool, "kernel-doubly-commutes": bool, "parseval": bool}
//   checks      list of check names
//   output      report path prefix
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bdf/fixtures.hpp"
#include "bdf/serialize.hpp"

namespace bdf {

struct TransportConfig {
  std::uint64_t seed = 0;
  double condition_cap = 1e3;
  int count = 1;
};

struct ExperimentConfig {
  std::string name = "experiment";
  DegreePair order{};
  Fixture model;  // resolved model source
  std::optional<DegreePair> horizon;
  std::uint64_t seed = 0;
  std::optional<TransportConfig> transport;
  int trials = 20;
  std::vector<DegreePair> orders;
  std::map<std::string, bool> expect;
  std::vector<std::string> checks;
  std::string output;

  DegreePair effective_horizon() const { return horizon.value_or(order); }
};

/// Check names in execution order.
const std::vector<std::string>& known_checks();

/// Throws ConfigError on schema violations and unknown check names.
ExperimentConfig parse_config(const Json& j);
ExperimentConfig load_config(const std::filesystem::path& path);

/// "z", "w", "zw", "z^2w", "z2w2", "1".
DegreePair parse_monomial(std::string_view text);

struct CheckResult {
  std::string name;
  bool pass = false;
  Json report;
  std::string csv;  // optional tabular mirror
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 check failed, 2 config error, 3 numerical guard
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;
  std::string error;
  Json summary;
};

/// Never throws for configuration, precondition or guard errors; these are
/// reported through exit_code and error.
RunResult run_experiment(const ExperimentConfig& config);

enum class ReportFormat { json, csv };

/// Writes <prefix>.<check>.json (and .csv where available for csv format),
/// <prefix>.summary.json and <prefix>.meta.json; parent directories are created.
void write_reports(const RunResult& result, const std::string& prefix, ReportFormat format);

}  // namespace bdf
