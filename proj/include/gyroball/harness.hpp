#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gyroball/types.hpp"

namespace gyroball {

struct VerifyConfig {
  std::vector<int> dims{2, 3, 5, 8};
  int samples = 10000;
  std::uint64_t seed = 42;
  double r_max = 0.95;
  /// Per-suite overrides of the primary tolerance. Checks with fixed
  /// constants (exactness, cross-formula agreement) ignore overrides.
  std::map<std::string, double> tolerance_overrides;
  /// Worker count for the sample scan; 0 picks the hardware concurrency.
  /// Results are bitwise identical for every value.
  int threads = 1;
};

/// Min/max of a diagnostic quantity tracked during a scan.
struct InfoRange {
  double min_value;
  double max_value;
};

struct VerifyReport {
  std::string suite;
  int dim = 0;
  int samples = 0;
  long failures = 0;  // samples with at least one failing check
  double max_residual = 0.0;
  /// Self-contained record of the first failing check, replayable through
  /// replay_witness.
  std::optional<nlohmann::ordered_json> first_failure_witness;
  /// Diagnostic ranges for the human-readable table; not serialized.
  std::map<std::string, InfoRange> info;

  nlohmann::ordered_json to_json() const;
};

std::vector<std::string> registered_suites();

/// Runs one registered suite over every configured dimension; one report per
/// dimension, in configuration order. Throws UnknownSuite for a name not in
/// the registry and Error for an invalid configuration.
std::vector<VerifyReport> run_suite(const std::string& name,
                                    const VerifyConfig& cfg);

/// Runs every registered suite in registry order.
std::vector<VerifyReport> run_all(const VerifyConfig& cfg);

bool all_passed(const std::vector<VerifyReport>& reports);

/// One JSON object per line, in report order.
std::string to_jsonl(const std::vector<VerifyReport>& reports);

std::string report_table(const std::vector<VerifyReport>& reports);

/// Re-evaluates the check recorded in a witness on its serialized inputs and
/// returns the recomputed residual.
double replay_witness(const nlohmann::json& witness);

}  // namespace gyroball
