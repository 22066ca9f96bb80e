// Acceptance gate: one line per criterion, [PASS] or [FAIL], exit 0 only if
// every criterion holds. Scales and tolerances are fixed here on purpose;
// loosening them is a contract change, not a tuning knob.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "gyroball/clifford.hpp"
#include "gyroball/errors.hpp"
#include "gyroball/gyro.hpp"
#include "gyroball/harness.hpp"
#include "gyroball/metric.hpp"

namespace {

int total_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", idx, name,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++total_failures;
}

gyroball::VerifyConfig base_cfg() {
  gyroball::VerifyConfig cfg;
  cfg.dims = {2, 3, 5, 8};
  cfg.samples = 10000;
  cfg.seed = 42;
  cfg.r_max = 0.95;
  cfg.threads = 0;
  return cfg;
}

struct Outcome {
  bool pass = false;
  double max_residual = 0.0;
  double seconds = 0.0;
};

Outcome run(const std::string& suite, const gyroball::VerifyConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = gyroball::run_suite(suite, cfg);
  const auto t1 = std::chrono::steady_clock::now();
  Outcome out;
  out.pass = gyroball::all_passed(reports);
  for (const auto& r : reports) {
    out.max_residual = std::max(out.max_residual, r.max_residual);
  }
  out.seconds = std::chrono::duration<double>(t1 - t0).count();
  return out;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

gyroball::Vec vec2(double x, double y) {
  gyroball::Vec v(2);
  v << x, y;
  return v;
}

void criterion1() {
  const Outcome o = run("axioms", base_cfg());
  report(1, "gyrogroup axioms, dims {2,3,5,8} x 10^4 within 1e-9",
         o.pass && o.seconds < 60.0,
         fmt("max residual %.2e, %.1f s", o.max_residual, o.seconds));
}

void criterion2() {
  const Outcome o = run("table1", base_cfg());
  report(2, "gyrogroup identities, dims {2,3,5,8} x 10^4 within 1e-9", o.pass,
         fmt("max residual %.2e", o.max_residual));
}

void criterion3() {
  auto cfg = base_cfg();
  cfg.samples = 100000;
  const Outcome o = run("inequality", cfg);

  const gyroball::BallVector u{vec2(0.5, 0.0)}, v{vec2(0.3, 0.0)};
  const double norm = gyroball::mobius_add_direct(u, v).norm();
  const gyroball::NormBounds nb = gyroball::norm_bounds(u, v);
  const bool fixtures = std::abs(norm - 0.6956522) < 1e-7 &&
                        std::abs(nb.lower - 0.1739130) < 1e-7 &&
                        std::abs(nb.upper - 0.9411765) < 1e-7;

  report(3, "norm inequality, 10^5 pairs per dim plus collinear fixtures",
         o.pass && fixtures,
         fmt("max residual %.2e, fixture norm %.7f", o.max_residual, norm));
}

void criterion4() {
  auto cfg = base_cfg();
  cfg.dims = {2, 3, 4, 5, 6, 7, 8};
  const Outcome bulk = run("backend_equiv", cfg);
  const bool bulk_ok = bulk.pass && bulk.max_residual <= 1e-12;

  cfg.r_max = 1.0 - 1e-6;
  cfg.tolerance_overrides["backend_equiv"] = 1e-8;
  const Outcome edge = run("backend_equiv", cfg);
  const bool edge_ok = edge.pass && edge.max_residual <= 1e-8;

  report(4, "backend equivalence, dims 2-8, 1e-12 bulk and 1e-8 near boundary",
         bulk_ok && edge_ok,
         fmt("bulk %.2e, near-boundary %.2e", bulk.max_residual,
             edge.max_residual));
}

void criterion5() {
  auto cfg = base_cfg();
  cfg.samples = 100000;
  const Outcome metric = run("dT_metric", cfg);

  auto tcfg = base_cfg();
  const Outcome topo = run("topology", tcfg);

  report(5, "arctan metric axioms, bounds, closed forms and ball topology",
         metric.pass && topo.pass,
         fmt("metric residual %.2e, topology residual %.2e",
             metric.max_residual, topo.max_residual));
}

void criterion6() {
  const Outcome o = run("isometry_group", base_cfg());
  report(6, "isometry group law, inverses, symmetries and transport", o.pass,
         fmt("max residual %.2e", o.max_residual));
}

void criterion7() {
  const Outcome o = run("clifford_core", base_cfg());

  const gyroball::Mat m =
      gyroball::gyration_matrix(
          {gyroball::BallVector{vec2(0.5, 0.0)},
           gyroball::BallVector{vec2(0.0, 0.5)}})
          .matrix();
  const double fixture_err =
      std::max({std::abs(m(0, 0) - 15.0 / 17.0), std::abs(m(0, 1) - 8.0 / 17.0),
                std::abs(m(1, 0) + 8.0 / 17.0),
                std::abs(m(1, 1) - 15.0 / 17.0)});

  report(7, "clifford relations, rotor sandwiches and the 15/17 gyration fixture",
         o.pass && fixture_err < 1e-12,
         fmt("max residual %.2e, fixture error %.2e", o.max_residual,
             fixture_err));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion8() {
  std::string dir = "/tmp/gyroball_accept_XXXXXX";
  if (mkdtemp(dir.data()) == nullptr) {
    report(8, "byte-identical reports across reruns and thread widths", false,
           "mkdtemp failed");
    return;
  }
  const std::string base =
      std::string(GYROBALL_CLI_PATH) + " verify --suite all --seed 42 --jsonl ";
  const std::string f1 = dir + "/run1.jsonl";
  const std::string f2 = dir + "/run2.jsonl";
  const std::string f3 = dir + "/run3.jsonl";
  bool spawned = true;
  for (const auto& [file, threads] :
       std::vector<std::pair<std::string, std::string>>{
           {f1, "1"}, {f2, "1"}, {f3, "4"}}) {
    const std::string cmd =
        base + file + " --threads " + threads + " > /dev/null";
    const int raw = std::system(cmd.c_str());
    if (!WIFEXITED(raw) || WEXITSTATUS(raw) != 0) spawned = false;
  }
  const std::string b1 = slurp(f1);
  const bool ok = spawned && !b1.empty() && b1 == slurp(f2) && b1 == slurp(f3);
  report(8, "byte-identical reports across reruns and thread widths", ok,
         spawned ? fmt("%.0f report bytes x 3 runs",
                       static_cast<double>(b1.size()))
                 : "verify run failed");
}

}  // namespace

int main() {
  using CriterionFn = void (*)();
  const CriterionFn criteria[] = {criterion1, criterion2, criterion3,
                                  criterion4, criterion5, criterion6,
                                  criterion7, criterion8};
  int idx = 0;
  for (const CriterionFn fn : criteria) {
    ++idx;
    try {
      fn();
    } catch (const std::exception& e) {
      report(idx, "unexpected error", false, e.what());
    }
  }
  std::printf("%s: %d of 8 criteria passed\n",
              total_failures == 0 ? "ACCEPTED" : "REJECTED",
              8 - total_failures);
  return total_failures == 0 ? 0 : 1;
}
