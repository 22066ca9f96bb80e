#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gyroball/harness.hpp"

namespace gyroball {

// One throughput measurement. drift is the worst per-component divergence
// between the two backends of the same operation over a long alternating
// chain; it is NaN when the dimension exceeds the Clifford backend cap and
// no twin backend exists.
struct BenchRow {
  int dim = 0;
  std::string op;       // "add" or "gyr"
  std::string backend;  // "direct", "clifford", "rotor", "gyrator_identity"
  double ops_per_sec = 0.0;
  double drift = 0.0;
};

// Runs timing loops for every backend available at each requested dimension.
// Unlike verification, dimensions above the Clifford cap are allowed; the
// coordinate backends work in any dimension.
std::vector<BenchRow> bench_backends(const VerifyConfig& cfg);

std::string bench_table(const std::vector<BenchRow>& rows);
nlohmann::ordered_json bench_to_json(const std::vector<BenchRow>& rows);

}  // namespace gyroball
