#include <cmath>
#include <string>
#include <vector>

#include <doctest.h>

#include "gyroball/bench.hpp"
#include "gyroball/errors.hpp"
#include "gyroball/harness.hpp"

using gyroball::VerifyConfig;
using gyroball::VerifyReport;

namespace {

VerifyConfig small_cfg() {
  VerifyConfig cfg;
  cfg.dims = {2, 3};
  cfg.samples = 100;
  cfg.seed = 42;
  return cfg;
}

}  // namespace

TEST_CASE("suite registry") {
  const std::vector<std::string> expect = {
      "axioms",        "table1",   "inequality",    "gyronorm",
      "dT_metric",     "topology", "backend_equiv", "isometry_group",
      "clifford_core"};
  CHECK(gyroball::registered_suites() == expect);
  CHECK_THROWS_AS((void)gyroball::run_suite("nosuch", small_cfg()),
                  gyroball::UnknownSuite);
}

TEST_CASE("config validation") {
  VerifyConfig cfg = small_cfg();
  cfg.samples = 0;
  CHECK_THROWS_AS((void)gyroball::run_suite("axioms", cfg), gyroball::Error);
  cfg = small_cfg();
  cfg.dims = {13};
  CHECK_THROWS_AS((void)gyroball::run_suite("axioms", cfg), gyroball::Error);
  cfg = small_cfg();
  cfg.dims.clear();
  CHECK_THROWS_AS((void)gyroball::run_suite("axioms", cfg), gyroball::Error);
  cfg = small_cfg();
  cfg.r_max = 1.0;
  CHECK_THROWS_AS((void)gyroball::run_suite("axioms", cfg), gyroball::Error);
  cfg = small_cfg();
  cfg.threads = -1;
  CHECK_THROWS_AS((void)gyroball::run_suite("axioms", cfg), gyroball::Error);
}

TEST_CASE("single-sample counting contract") {
  VerifyConfig cfg = small_cfg();
  cfg.dims = {2};
  cfg.samples = 1;
  const auto reports = gyroball::run_suite("axioms", cfg);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].suite == "axioms");
  CHECK(reports[0].dim == 2);
  CHECK(reports[0].samples == 1);
  CHECK(reports[0].failures == 0);
  CHECK_FALSE(reports[0].first_failure_witness.has_value());
}

TEST_CASE("every suite passes at smoke scale") {
  const auto reports = gyroball::run_all(small_cfg());
  REQUIRE(reports.size() == 9 * 2);
  CHECK(gyroball::all_passed(reports));
  // Ordering: suites in registry order, dims ascending within each.
  CHECK(reports[0].suite == "axioms");
  CHECK(reports[0].dim == 2);
  CHECK(reports[1].dim == 3);
  CHECK(reports[17].suite == "clifford_core");
}

TEST_CASE("reports are deterministic across reruns and thread widths") {
  VerifyConfig cfg = small_cfg();
  const std::string first = gyroball::to_jsonl(gyroball::run_all(cfg));
  const std::string second = gyroball::to_jsonl(gyroball::run_all(cfg));
  CHECK(first == second);

  cfg.threads = 4;
  const std::string parallel = gyroball::to_jsonl(gyroball::run_all(cfg));
  CHECK(first == parallel);

  cfg.threads = 0;  // hardware concurrency
  CHECK(first == gyroball::to_jsonl(gyroball::run_all(cfg)));
}

TEST_CASE("seed changes the stream") {
  VerifyConfig cfg = small_cfg();
  const auto a = gyroball::run_suite("axioms", cfg);
  cfg.seed = 7;
  const auto b = gyroball::run_suite("axioms", cfg);
  CHECK(a[0].max_residual != b[0].max_residual);
}

TEST_CASE("impossible tolerance produces failures and a replayable witness") {
  VerifyConfig cfg = small_cfg();
  cfg.dims = {3};
  cfg.samples = 20;
  cfg.tolerance_overrides["axioms"] = 1e-30;
  const auto reports = gyroball::run_suite("axioms", cfg);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].failures == 20);
  REQUIRE(reports[0].first_failure_witness.has_value());

  const auto& w = *reports[0].first_failure_witness;
  CHECK(w.at("suite") == "axioms");
  CHECK(w.at("dim") == 3);
  CHECK(w.at("sample") == 0);
  CHECK(w.at("tolerance").get<double>() == 1e-30);

  // Replaying the serialized inputs reproduces the recorded residual exactly:
  // the witness stores shortest round-trip decimals.
  const double replayed = gyroball::replay_witness(w);
  CHECK(replayed == w.at("residual").get<double>());

  const std::string jsonl = gyroball::to_jsonl(reports);
  const auto reparsed = nlohmann::json::parse(
      jsonl.substr(0, jsonl.find('\n')));
  CHECK(gyroball::replay_witness(reparsed.at("first_failure_witness")) ==
        replayed);
}

TEST_CASE("replay rejects malformed witnesses") {
  CHECK_THROWS_AS((void)gyroball::replay_witness(nlohmann::json::object()),
                  gyroball::Error);
  nlohmann::json w;
  w["suite"] = "axioms";
  w["check"] = "bogus";
  w["dim"] = 2;
  w["inputs"] = {{"vecs", nlohmann::json::array()},
                 {"mats", nlohmann::json::array()},
                 {"reals", nlohmann::json::array()}};
  CHECK_THROWS_AS((void)gyroball::replay_witness(w), gyroball::Error);
}

TEST_CASE("near-boundary backend run stays within the relaxed tolerance") {
  VerifyConfig cfg;
  cfg.dims = {2, 5, 8};
  cfg.samples = 300;
  cfg.seed = 42;
  cfg.r_max = 1.0 - 1e-6;
  cfg.tolerance_overrides["backend_equiv"] = 1e-8;
  const auto reports = gyroball::run_suite("backend_equiv", cfg);
  for (const auto& r : reports) {
    CHECK(r.failures == 0);
    CHECK(r.max_residual < 1e-8);
  }
}

TEST_CASE("clifford suite logs the gyration determinant range") {
  VerifyConfig cfg = small_cfg();
  cfg.dims = {3};
  const auto reports = gyroball::run_suite("clifford_core", cfg);
  REQUIRE(reports.size() == 1);
  REQUIRE(reports[0].info.count("gyr_det") == 1);
  const auto& range = reports[0].info.at("gyr_det");
  CHECK(range.min_value > 0.999);
  CHECK(range.max_value < 1.001);

  // Info metrics annotate the table but stay out of the serialized report.
  CHECK(gyroball::report_table(reports).find("gyr_det") != std::string::npos);
  CHECK(gyroball::to_jsonl(reports).find("gyr_det") == std::string::npos);
}

TEST_CASE("report JSON carries the stable field set") {
  VerifyConfig cfg = small_cfg();
  cfg.dims = {2};
  cfg.samples = 10;
  const auto reports = gyroball::run_suite("gyronorm", cfg);
  const auto j = reports[0].to_json();
  CHECK(j.at("suite") == "gyronorm");
  CHECK(j.at("dim") == 2);
  CHECK(j.at("samples") == 10);
  CHECK(j.at("failures") == 0);
  CHECK(j.contains("max_residual"));
  CHECK_FALSE(j.contains("first_failure_witness"));
}

TEST_CASE("bench covers both backends and caps clifford rows") {
  VerifyConfig cfg;
  cfg.dims = {2, 14};
  cfg.samples = 50;
  cfg.seed = 42;
  const auto rows = gyroball::bench_backends(cfg);

  int dim2_rows = 0, dim14_rows = 0;
  bool saw_clifford14 = false, saw_rotor14 = false;
  for (const auto& r : rows) {
    CHECK(r.ops_per_sec > 0.0);
    if (r.dim == 2) {
      ++dim2_rows;
      CHECK(std::isfinite(r.drift));
      CHECK(r.drift < 1e-9);
    }
    if (r.dim == 14) {
      ++dim14_rows;
      CHECK(std::isnan(r.drift));
      if (r.backend == "clifford") saw_clifford14 = true;
      if (r.backend == "rotor") saw_rotor14 = true;
    }
  }
  CHECK(dim2_rows == 4);
  CHECK(dim14_rows == 2);
  CHECK_FALSE(saw_clifford14);
  CHECK_FALSE(saw_rotor14);

  const auto j = gyroball::bench_to_json(rows);
  bool nan_as_null = false;
  for (const auto& row : j) {
    if (row.at("dim") == 14 && row.at("drift").is_null()) nan_as_null = true;
  }
  CHECK(nan_as_null);
  CHECK(gyroball::bench_table(rows).find("n/a") != std::string::npos);
}
