#include "gyroball/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include "gyroball/errors.hpp"
#include "gyroball/gyro.hpp"
#include "gyroball/rng.hpp"

namespace gyroball {

namespace {

constexpr int kPool = 64;
constexpr int kDriftSteps = 1000;

struct Pools {
  std::vector<BallVector> us, vs, ws;
};

Pools make_pools(int dim, const VerifyConfig& cfg) {
  SampleRng rng(cfg.seed, "bench", dim, 0);
  Pools p;
  p.us.reserve(kPool);
  p.vs.reserve(kPool);
  p.ws.reserve(kPool);
  for (int i = 0; i < kPool; ++i) {
    p.us.push_back(rng.ball_point(dim, cfg.r_max));
    p.vs.push_back(rng.ball_point(dim, cfg.r_max));
    p.ws.push_back(rng.ball_point(dim, cfg.r_max));
  }
  return p;
}

template <typename Fn>
double ops_per_sec(int iterations, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  double sink = 0.0;
  for (int i = 0; i < iterations; ++i) sink += fn(i);
  const auto t1 = std::chrono::steady_clock::now();
  volatile double keep = sink;
  (void)keep;
  const double secs =
      std::max(std::chrono::duration<double>(t1 - t0).count(), 1e-9);
  return iterations / secs;
}

// Alternating left factors t, then -t cancel by left cancellation, so the
// chain state stays bounded while backend discrepancies accumulate freely.
double add_drift(const Pools& p) {
  BallVector direct = p.ws[0];
  BallVector clifford = p.ws[0];
  double drift = 0.0;
  for (int step = 0; step < kDriftSteps; ++step) {
    const BallVector& g = p.us[(step / 2) % kPool];
    const BallVector t = (step % 2 == 0) ? g : g.negated();
    direct = mobius_add_direct(t, direct);
    clifford = mobius_add_clifford(t, clifford);
    drift = std::max(drift,
                     (direct.coords() - clifford.coords()).cwiseAbs().maxCoeff());
  }
  return drift;
}

double gyr_drift(const Pools& p) {
  BallVector rotor = p.ws[1 % kPool];
  BallVector chained = rotor;
  double drift = 0.0;
  for (int step = 0; step < kDriftSteps; ++step) {
    const GyrationSpec spec{p.us[step % kPool], p.vs[step % kPool]};
    rotor = gyration_apply(spec, rotor, GyrBackend::rotor);
    chained = gyration_apply(spec, chained, GyrBackend::gyrator_identity);
    drift = std::max(drift,
                     (rotor.coords() - chained.coords()).cwiseAbs().maxCoeff());
  }
  return drift;
}

void validate_bench_config(const VerifyConfig& cfg) {
  if (cfg.samples < 1) throw Error("samples must be >= 1");
  if (cfg.dims.empty()) throw Error("at least one dimension is required");
  for (const int d : cfg.dims) {
    if (d < 1) throw Error("dimension " + std::to_string(d) + " must be >= 1");
  }
  if (!(cfg.r_max > 0.0 && cfg.r_max < 1.0)) {
    throw Error("r_max must lie in (0, 1)");
  }
}

}  // namespace

std::vector<BenchRow> bench_backends(const VerifyConfig& cfg) {
  validate_bench_config(cfg);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<BenchRow> rows;
  for (const int dim : cfg.dims) {
    const Pools p = make_pools(dim, cfg);
    const bool clifford_ok = dim <= dim_max;
    const double da = clifford_ok ? add_drift(p) : nan;

    rows.push_back({dim, "add", "direct",
                    ops_per_sec(cfg.samples,
                                [&](int i) {
                                  return mobius_add_direct(
                                      p.us[i % kPool], p.vs[i % kPool])[0];
                                }),
                    da});
    if (clifford_ok) {
      rows.push_back({dim, "add", "clifford",
                      ops_per_sec(cfg.samples,
                                  [&](int i) {
                                    return mobius_add_clifford(
                                        p.us[i % kPool], p.vs[i % kPool])[0];
                                  }),
                      da});
    }

    const double dg = clifford_ok ? gyr_drift(p) : nan;
    if (clifford_ok) {
      rows.push_back({dim, "gyr", "rotor",
                      ops_per_sec(cfg.samples,
                                  [&](int i) {
                                    return gyration_apply(
                                        {p.us[i % kPool], p.vs[i % kPool]},
                                        p.ws[i % kPool], GyrBackend::rotor)[0];
                                  }),
                      dg});
    }
    rows.push_back(
        {dim, "gyr", "gyrator_identity",
         ops_per_sec(cfg.samples,
                     [&](int i) {
                       return gyration_apply(
                           {p.us[i % kPool], p.vs[i % kPool]},
                           p.ws[i % kPool], GyrBackend::gyrator_identity)[0];
                     }),
         dg});
  }
  return rows;
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  std::string out =
      "dim  op   backend            ops/sec       max-drift\n";
  char buf[160];
  for (const BenchRow& r : rows) {
    if (std::isnan(r.drift)) {
      std::snprintf(buf, sizeof buf, "%3d  %-3s  %-16s  %12.3e  %s\n", r.dim,
                    r.op.c_str(), r.backend.c_str(), r.ops_per_sec, "n/a");
    } else {
      std::snprintf(buf, sizeof buf, "%3d  %-3s  %-16s  %12.3e  %10.3e\n",
                    r.dim, r.op.c_str(), r.backend.c_str(), r.ops_per_sec,
                    r.drift);
    }
    out += buf;
  }
  return out;
}

nlohmann::ordered_json bench_to_json(const std::vector<BenchRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const BenchRow& r : rows) {
    nlohmann::ordered_json j;
    j["dim"] = r.dim;
    j["op"] = r.op;
    j["backend"] = r.backend;
    j["ops_per_sec"] = r.ops_per_sec;
    if (std::isnan(r.drift)) {
      j["drift"] = nullptr;
    } else {
      j["drift"] = r.drift;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace gyroball
