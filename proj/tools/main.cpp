#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gyroball/bench.hpp"
#include "gyroball/errors.hpp"
#include "gyroball/gyro.hpp"
#include "gyroball/harness.hpp"
#include "gyroball/isometry.hpp"
#include "gyroball/metric.hpp"

namespace {

using gyroball::BallVector;
using gyroball::Error;
using gyroball::Vec;
using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

// Vectors arrive either inline as comma-separated reals or as @file.json
// holding a JSON array.
Vec parse_vec(const std::string& text) {
  std::vector<double> vals;
  if (!text.empty() && text[0] == '@') {
    const json j = read_json_file(text.substr(1));
    if (!j.is_array()) throw Error("'" + text.substr(1) + "' is not a JSON array");
    for (const auto& x : j) {
      if (!x.is_number()) throw Error("vector entries must be numbers");
      vals.push_back(x.get<double>());
    }
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        vals.push_back(std::stod(tok, &used));
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size()) throw Error("trailing characters in '" + tok + "'");
      } catch (const std::logic_error&) {
        throw Error("cannot parse '" + tok + "' as a real number");
      }
    }
  }
  if (vals.empty()) throw Error("empty vector");
  Vec v(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) v[i] = vals[i];
  return v;
}

ojson vec_json(const Vec& v) {
  return ojson(std::vector<double>(v.begin(), v.end()));
}

ojson mat_json(const gyroball::Mat& m) {
  ojson rows = ojson::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::vector<double> row(m.cols());
    for (Eigen::Index c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit(const ojson& j) { std::cout << j.dump() << "\n"; }

gyroball::Isometry load_isometry(const std::string& path) {
  return gyroball::isometry_from_json(read_json_file(path));
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      dims.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw Error("trailing characters in '" + tok + "'");
    } catch (const std::logic_error&) {
      throw Error("cannot parse dimension '" + tok + "'");
    }
  }
  if (dims.empty()) throw Error("empty dimension list");
  return dims;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("GYROBALL_SEED");
  if (env == nullptr || *env == '\0') return 42;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw Error("GYROBALL_SEED must be a decimal 64-bit integer");
  }
  return v;
}

gyroball::VerifyConfig build_config(const std::string& dims_text, int samples,
                                    std::uint64_t seed, double r_max,
                                    const std::vector<std::string>& tol_specs,
                                    int threads) {
  gyroball::VerifyConfig cfg;
  cfg.dims = parse_dims(dims_text);
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.r_max = r_max;
  cfg.threads = threads;
  for (const std::string& spec : tol_specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw Error("expected --tol suite=value, got '" + spec + "'");
    }
    try {
      std::size_t used = 0;
      const double value = std::stod(spec.substr(eq + 1), &used);
      if (used != spec.size() - eq - 1) throw Error("bad tolerance");
      cfg.tolerance_overrides[spec.substr(0, eq)] = value;
    } catch (const std::logic_error&) {
      throw Error("cannot parse tolerance in '" + spec + "'");
    }
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mobius gyrogroup on the unit ball: arithmetic, metrics, "
               "isometries, verification"};
  app.require_subcommand(1);
  int rc = 0;

  try {
    // ---- add ----
    auto* add = app.add_subcommand("add", "Mobius addition u + v");
    std::string add_u, add_v, add_backend = "direct";
    add->add_option("--u", add_u, "left operand")->required();
    add->add_option("--v", add_v, "right operand")->required();
    add->add_option("--backend", add_backend, "direct or clifford")
        ->check(CLI::IsMember({"direct", "clifford"}));
    add->callback([&] {
      const BallVector u{parse_vec(add_u)}, v{parse_vec(add_v)};
      const auto backend = add_backend == "direct"
                               ? gyroball::AddBackend::direct
                               : gyroball::AddBackend::clifford;
      emit(vec_json(gyroball::mobius_add(u, v, backend).coords()));
    });

    // ---- neg ----
    auto* neg = app.add_subcommand("neg", "Mobius inverse of v");
    std::string neg_v;
    neg->add_option("--v", neg_v, "operand")->required();
    neg->callback([&] {
      emit(vec_json(BallVector{parse_vec(neg_v)}.negated().coords()));
    });

    // ---- gyr ----
    auto* gyr = app.add_subcommand("gyr", "gyration gyr[u,v] of a point, or its matrix");
    std::string gyr_u, gyr_v, gyr_w, gyr_backend = "rotor";
    bool gyr_matrix = false;
    gyr->add_option("--u", gyr_u, "first gyration argument")->required();
    gyr->add_option("--v", gyr_v, "second gyration argument")->required();
    auto* gyr_w_opt = gyr->add_option("--w", gyr_w, "point to gyrate");
    auto* gyr_m_opt =
        gyr->add_flag("--matrix", gyr_matrix, "print the gyration matrix");
    gyr_w_opt->excludes(gyr_m_opt);
    gyr->add_option("--backend", gyr_backend, "rotor or identity")
        ->check(CLI::IsMember({"rotor", "identity"}));
    gyr->callback([&] {
      const BallVector u{parse_vec(gyr_u)}, v{parse_vec(gyr_v)};
      if (gyr_matrix) {
        emit(mat_json(gyroball::gyration_matrix({u, v}).matrix()));
        return;
      }
      if (gyr_w.empty()) throw Error("one of --w or --matrix is required");
      const BallVector w{parse_vec(gyr_w)};
      const auto backend = gyr_backend == "rotor"
                               ? gyroball::GyrBackend::rotor
                               : gyroball::GyrBackend::gyrator_identity;
      emit(vec_json(gyroball::gyration_apply({u, v}, w, backend).coords()));
    });

    // ---- dist ----
    auto* dist = app.add_subcommand("dist", "distance between x and y");
    std::string dist_x, dist_y, dist_metric = "arctan", dist_mode = "closed_form";
    dist->add_option("--x", dist_x, "first point")->required();
    dist->add_option("--y", dist_y, "second point")->required();
    dist->add_option("--metric", dist_metric,
                     "gyrometric, rapidity, poincare or arctan")
        ->check(CLI::IsMember({"gyrometric", "rapidity", "poincare", "arctan"}));
    dist->add_option("--mode", dist_mode, "poincare evaluation mode")
        ->check(CLI::IsMember({"closed_form", "via_addition"}));
    dist->callback([&] {
      const BallVector x{parse_vec(dist_x)}, y{parse_vec(dist_y)};
      double d = 0.0;
      if (dist_metric == "gyrometric") {
        d = gyroball::gyrometric(x, y);
      } else if (dist_metric == "rapidity") {
        d = gyroball::rapidity_metric(x, y);
      } else if (dist_metric == "poincare") {
        d = gyroball::poincare_metric(
            x, y,
            dist_mode == "closed_form" ? gyroball::PoincareMode::closed_form
                                        : gyroball::PoincareMode::via_addition);
      } else {
        d = gyroball::metric_T(x, y);
      }
      emit(ojson(d));
    });

    // ---- bounds ----
    auto* bounds = app.add_subcommand("bounds", "norm bounds for u + v");
    std::string bounds_u, bounds_v;
    bounds->add_option("--u", bounds_u, "left operand")->required();
    bounds->add_option("--v", bounds_v, "right operand")->required();
    bounds->callback([&] {
      const BallVector u{parse_vec(bounds_u)}, v{parse_vec(bounds_v)};
      const gyroball::NormBounds nb = gyroball::norm_bounds(u, v);
      ojson j;
      j["lower"] = nb.lower;
      j["upper"] = nb.upper;
      emit(j);
    });

    // ---- isom ----
    auto* isom = app.add_subcommand("isom", "isometry algebra on (u, tau) pairs");
    isom->require_subcommand(1);

    auto* icompose = isom->add_subcommand("compose", "compose two isometries");
    std::vector<std::string> icompose_files;
    icompose->add_option("files", icompose_files, "S.json T.json")
        ->expected(2);
    icompose->callback([&] {
      const auto s = load_isometry(icompose_files[0]);
      const auto t = load_isometry(icompose_files[1]);
      emit(gyroball::isometry_to_json(gyroball::compose(s, t)));
    });

    auto* iinverse = isom->add_subcommand("inverse", "invert an isometry");
    std::string iinverse_file;
    iinverse->add_option("file", iinverse_file, "T.json")->required();
    iinverse->callback([&] {
      emit(gyroball::isometry_to_json(gyroball::inverse(load_isometry(iinverse_file))));
    });

    auto* iapply = isom->add_subcommand("apply", "apply an isometry to a point");
    std::string iapply_file, iapply_x;
    iapply->add_option("file", iapply_file, "T.json")->required();
    iapply->add_option("--x", iapply_x, "point")->required();
    iapply->callback([&] {
      const auto t = load_isometry(iapply_file);
      emit(vec_json(t.apply(BallVector{parse_vec(iapply_x)}).coords()));
    });

    auto* isymmetry = isom->add_subcommand("symmetry", "point symmetry at x");
    std::string isymmetry_x;
    isymmetry->add_option("--x", isymmetry_x, "fixed point")->required();
    isymmetry->callback([&] {
      emit(gyroball::isometry_to_json(
          gyroball::symmetry_at(BallVector{parse_vec(isymmetry_x)})));
    });

    auto* itransport = isom->add_subcommand("transport", "isometry taking x to y");
    std::string itransport_x, itransport_y;
    itransport->add_option("--x", itransport_x, "source")->required();
    itransport->add_option("--y", itransport_y, "target")->required();
    itransport->callback([&] {
      emit(gyroball::isometry_to_json(
          gyroball::transport(BallVector{parse_vec(itransport_x)},
                              BallVector{parse_vec(itransport_y)})));
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run property-verification suites");
    std::string v_suite = "all", v_dims = "2,3,5,8", v_jsonl;
    int v_samples = 10000, v_threads = 1;
    std::uint64_t v_seed = default_seed();
    double v_rmax = 0.95;
    std::vector<std::string> v_tols;
    verify->add_option("--suite", v_suite, "suite name or 'all'");
    verify->add_option("--dims", v_dims, "comma-separated dimensions");
    verify->add_option("--samples", v_samples, "samples per suite per dim");
    verify->add_option("--seed", v_seed, "RNG seed");
    verify->add_option("--r-max", v_rmax, "sampling radius bound in (0,1)");
    verify->add_option("--tol", v_tols, "per-suite tolerance override, suite=value");
    verify->add_option("--threads", v_threads,
                       "worker threads (0 = hardware concurrency)");
    verify->add_option("--jsonl", v_jsonl,
                       "write JSONL report to this file ('-' for stdout)");
    verify->callback([&] {
      const auto cfg =
          build_config(v_dims, v_samples, v_seed, v_rmax, v_tols, v_threads);
      const auto reports = v_suite == "all"
                               ? gyroball::run_all(cfg)
                               : gyroball::run_suite(v_suite, cfg);
      if (v_jsonl == "-") {
        std::cout << gyroball::to_jsonl(reports);
      } else {
        std::cout << gyroball::report_table(reports);
        if (!v_jsonl.empty()) {
          std::ofstream out(v_jsonl, std::ios::binary);
          if (!out) throw Error("cannot write '" + v_jsonl + "'");
          out << gyroball::to_jsonl(reports);
        }
      }
      if (!gyroball::all_passed(reports)) rc = 1;
    });

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "backend throughput and drift");
    std::string b_dims = "2,3,5,8";
    int b_samples = 10000;
    std::uint64_t b_seed = default_seed();
    double b_rmax = 0.95;
    bool b_json = false;
    bench->add_option("--dims", b_dims,
                      "comma-separated dimensions (clifford rows capped at 12)");
    bench->add_option("--samples", b_samples, "timed operations per row");
    bench->add_option("--seed", b_seed, "RNG seed");
    bench->add_option("--r-max", b_rmax, "sampling radius bound in (0,1)");
    bench->add_flag("--json", b_json, "emit JSON instead of a table");
    bench->callback([&] {
      const auto cfg = build_config(b_dims, b_samples, b_seed, b_rmax, {}, 1);
      const auto rows = gyroball::bench_backends(cfg);
      if (b_json) {
        emit(gyroball::bench_to_json(rows));
      } else {
        std::cout << gyroball::bench_table(rows);
      }
    });

    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
