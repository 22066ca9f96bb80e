#include "gyroball/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <numbers>
#include <string_view>
#include <thread>
#include <utility>

#include "gyroball/clifford.hpp"
#include "gyroball/errors.hpp"
#include "gyroball/gyro.hpp"
#include "gyroball/isometry.hpp"
#include "gyroball/metric.hpp"
#include "gyroball/residual.hpp"
#include "gyroball/rng.hpp"
#include "gyroball/tolerances.hpp"

namespace gyroball {

namespace {

// ---------------------------------------------------------------------------
// Suite machinery.
//
// A suite draws one bundle of inputs per sample index and evaluates a list of
// checks on it. Draws depend only on (seed, suite, dim, sample), and checks
// are pure functions of (dim, inputs), which makes every scan bitwise
// reproducible under any thread partitioning and every recorded witness
// replayable in isolation.
// ---------------------------------------------------------------------------

struct Inputs {
  std::vector<Vec> vecs;
  std::vector<Mat> mats;
  std::vector<double> reals;
};

using EvalFn = double (*)(int dim, const Inputs& in);
using DrawFn = Inputs (*)(SampleRng& rng, int dim, const VerifyConfig& cfg);
using InfoFn = void (*)(int dim, const Inputs& in,
                        std::map<std::string, InfoRange>& acc);

struct Check {
  const char* name;
  bool overridable;  // true: suite primary tolerance, subject to overrides
  double fixed_tol;  // used when overridable is false
  EvalFn eval;
};

struct SuiteDef {
  const char* name;
  double primary_tol;
  DrawFn draw;
  std::vector<Check> checks;
  InfoFn info = nullptr;
};

BallVector P(const Inputs& in, std::size_t i) {
  return BallVector(in.vecs[i]);
}

double vres(const BallVector& a, const BallVector& b) {
  return vector_residual(a.coords(), b.coords());
}

void acc_info(std::map<std::string, InfoRange>& acc, const char* key,
              double v) {
  auto [it, inserted] = acc.try_emplace(key, InfoRange{v, v});
  if (!inserted) {
    it->second.min_value = std::min(it->second.min_value, v);
    it->second.max_value = std::max(it->second.max_value, v);
  }
}

Inputs draw_balls(SampleRng& rng, int dim, const VerifyConfig& cfg,
                  int count) {
  Inputs in;
  in.vecs.reserve(count);
  for (int i = 0; i < count; ++i) {
    in.vecs.push_back(rng.ball_point(dim, cfg.r_max).coords());
  }
  return in;
}

// Shared layout for the gyrogroup suites: u, v, w then eight probe points.
constexpr int U = 0, V = 1, W = 2, P0 = 3, NPROBES = 8;

Inputs draw_uvw_probes(SampleRng& rng, int dim, const VerifyConfig& cfg) {
  return draw_balls(rng, dim, cfg, P0 + NPROBES);
}

// ---------------------------------------------------------------------------
// axioms
// ---------------------------------------------------------------------------

const SuiteDef kAxioms{
    "axioms",
    1e-9,
    &draw_uvw_probes,
    {
        {"identity_element", true, 0.0,
         +[](int dim, const Inputs& in) {
           const BallVector v = P(in, V);
           const BallVector z = BallVector::zero(dim);
           return std::max(vres(mobius_add_direct(z, v), v),
                           vres(mobius_add_direct(v, z), v));
         }},
        {"inverse_element", true, 0.0,
         +[](int dim, const Inputs& in) {
           const BallVector v = P(in, V);
           const BallVector z = BallVector::zero(dim);
           return std::max(vres(mobius_add_direct(v.negated(), v), z),
                           vres(mobius_add_direct(v, v.negated()), z));
         }},
        {"left_gyroassociative", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector u = P(in, U), v = P(in, V), w = P(in, W);
           const BallVector lhs =
               mobius_add_direct(u, mobius_add_direct(v, w));
           const BallVector rhs = mobius_add_direct(
               mobius_add_direct(u, v), gyration_apply({u, v}, w));
           return vres(lhs, rhs);
         }},
        {"right_gyroassociative", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector u = P(in, U), v = P(in, V), w = P(in, W);
           const BallVector lhs =
               mobius_add_direct(mobius_add_direct(u, v), w);
           const BallVector rhs = mobius_add_direct(
               u, mobius_add_direct(v, gyration_apply({v, u}, w)));
           return vres(lhs, rhs);
         }},
        {"gyration_automorphism", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector u = P(in, U), v = P(in, V);
           const BallVector p = P(in, P0), q = P(in, P0 + 1);
           const Rotor g = gyration_rotor({u, v});
           const BallVector sum = mobius_add_direct(p, q);
           const Vec lhs = g.apply(sum.coords());
           const BallVector gp =
               BallVector::result(g.apply(p.coords()), p.complement());
           const BallVector gq =
               BallVector::result(g.apply(q.coords()), q.complement());
           return vector_residual(lhs, mobius_add_direct(gp, gq).coords());
         }},
        {"left_loop", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector u = P(in, U), v = P(in, V);
           const Rotor lhs = gyration_rotor({mobius_add_direct(u, v), v});
           const Rotor rhs = gyration_rotor({u, v});
           double worst = 0.0;
           for (int i = 0; i < NPROBES; ++i) {
             const Vec& p = in.vecs[P0 + i];
             worst = std::max(worst, vector_residual(lhs.apply(p), rhs.apply(p)));
           }
           return worst;
         }},
        {"right_loop", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector u = P(in, U), v = P(in, V);
           const Rotor lhs = gyration_rotor({u, mobius_add_direct(v, u)});
           const Rotor rhs = gyration_rotor({u, v});
           double worst = 0.0;
           for (int i = 0; i < NPROBES; ++i) {
             const Vec& p = in.vecs[P0 + i];
             worst = std::max(worst, vector_residual(lhs.apply(p), rhs.apply(p)));
           }
           return worst;
         }},
        {"gyrocommutative", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector u = P(in, U), v = P(in, V);
           const BallVector lhs = mobius_add_direct(u, v);
           const Vec rhs = gyration_rotor({u, v}).apply(
               mobius_add_direct(v, u).coords());
           return vector_residual(lhs.coords(), rhs);
         }},
        {"gyrator_identity", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector u = P(in, U), v = P(in, V), w = P(in, W);
           const Vec lhs = gyration_rotor({u, v}).apply(w.coords());
           const BallVector rhs =
               gyration_apply({u, v}, w, GyrBackend::gyrator_identity);
           return vector_residual(lhs, rhs.coords());
         }},
    }};

// ---------------------------------------------------------------------------
// table1: the standard gyrogroup identities
// ---------------------------------------------------------------------------

const SuiteDef kTable1{
    "table1",
    1e-9,
    &draw_uvw_probes,
    {
        {"left_cancellation", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector u = P(in, U), v = P(in, V);
           return vres(
               mobius_add_direct(u.negated(), mobius_add_direct(u, v)), v);
         }},
        {"inverse_of_sum", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector u = P(in, U), v = P(in, V);
           const BallVector lhs = mobius_add_direct(u, v).negated();
           const Vec rhs = gyration_rotor({u, v}).apply(
               mobius_add_direct(v.negated(), u.negated()).coords());
           return vector_residual(lhs.coords(), rhs);
         }},
        {"gluing_identity", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector u = P(in, U), v = P(in, V), w = P(in, W);
           const BallVector head = mobius_add_direct(u.negated(), v);
           const BallVector tail = mobius_add_direct(v.negated(), w);
           const Rotor g = gyration_rotor({u.negated(), v});
           const BallVector gt =
               BallVector::result(g.apply(tail.coords()), tail.complement());
           return vres(mobius_add_direct(head, gt),
                       mobius_add_direct(u.negated(), w));
         }},
        {"even_property", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector u = P(in, U), v = P(in, V);
           const Rotor lhs = gyration_rotor({u.negated(), v.negated()});
           const Rotor rhs = gyration_rotor({u, v});
           double worst = 0.0;
           for (int i = 0; i < NPROBES; ++i) {
             const Vec& p = in.vecs[P0 + i];
             worst = std::max(worst, vector_residual(lhs.apply(p), rhs.apply(p)));
           }
           return worst;
         }},
        {"inversive_symmetry", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector u = P(in, U), v = P(in, V);
           const Rotor fwd = gyration_rotor({u, v});
           const Rotor bwd = gyration_rotor({v, u});
           double worst = 0.0;
           for (int i = 0; i < NPROBES; ++i) {
             const Vec& p = in.vecs[P0 + i];
             worst = std::max(worst, vector_residual(fwd.apply(bwd.apply(p)), p));
           }
           return worst;
         }},
    }};

// ---------------------------------------------------------------------------
// inequality
// ---------------------------------------------------------------------------

Inputs draw_pair(SampleRng& rng, int dim, const VerifyConfig& cfg) {
  return draw_balls(rng, dim, cfg, 2);
}

const SuiteDef kInequality{
    "inequality",
    1e-12,
    &draw_pair,
    {
        {"norm_bounds_containment", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector u = P(in, 0), v = P(in, 1);
           const NormBounds nb = norm_bounds(u, v);
           const double actual = mobius_add_direct(u, v).norm();
           const double lower = std::max(nb.lower, 0.0);
           return std::max({0.0, lower - actual, actual - nb.upper});
         }},
    }};

// ---------------------------------------------------------------------------
// gyronorm
// ---------------------------------------------------------------------------

Inputs draw_quad(SampleRng& rng, int dim, const VerifyConfig& cfg) {
  return draw_balls(rng, dim, cfg, 4);
}

const SuiteDef kGyronorm{
    "gyronorm",
    1e-10,
    &draw_quad,
    {
        {"negation_invariance", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector x = P(in, 0);
           return std::abs(norm_T(x.negated()) - norm_T(x));
         }},
        {"subadditive_chain", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector x = P(in, 0), y = P(in, 1);
           const double nx = norm_T(x), ny = norm_T(y);
           const double s = norm_T(mobius_add_direct(x, y));
           return std::max({0.0, std::abs(nx - ny) - s, s - (nx + ny)});
         }},
        {"gyration_invariance", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector x = P(in, 0);
           const BallVector u = P(in, 2), v = P(in, 3);
           const double gyred =
               std::atan(gyration_rotor({u, v}).apply(x.coords()).norm());
           return std::abs(gyred - norm_T(x));
         }},
    }};

// ---------------------------------------------------------------------------
// dT_metric
// ---------------------------------------------------------------------------

const SuiteDef kDTMetric{
    "dT_metric",
    1e-12,
    &draw_quad,
    {
        {"identity_of_indiscernibles", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector x = P(in, 0);
           return metric_T(x, x);
         }},
        {"symmetry", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector x = P(in, 0), y = P(in, 1);
           return std::abs(metric_T(x, y) - metric_T(y, x));
         }},
        {"triangle", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector x = P(in, 0), y = P(in, 1), z = P(in, 2);
           return std::max(0.0,
                           metric_T(x, z) - metric_T(x, y) - metric_T(y, z));
         }},
        {"bounded", false, 0.0,
         +[](int dim, const Inputs& in) {
           const BallVector x = P(in, 0), y = P(in, 1), v = P(in, 3);
           const bool pair_ok = metric_T(x, y) < std::numbers::pi / 2;
           const bool origin_ok =
               metric_T(BallVector::zero(dim), v) < std::numbers::pi / 4;
           return (pair_ok && origin_ok) ? 0.0 : 1.0;
         }},
        {"origin_arctan_form", false, 1e-15,
         +[](int dim, const Inputs& in) {
           const BallVector v = P(in, 3);
           return std::abs(metric_T(BallVector::zero(dim), v) -
                           std::atan(v.norm()));
         }},
        {"dominated_by_rapidity", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector x = P(in, 0), y = P(in, 1);
           return std::max(0.0, metric_T(x, y) - rapidity_metric(x, y));
         }},
        {"poincare_mode_agreement", false, 1e-9,
         +[](int, const Inputs& in) {
           const BallVector x = P(in, 0), y = P(in, 1);
           return scalar_residual(
               poincare_metric(x, y, PoincareMode::closed_form),
               poincare_metric(x, y, PoincareMode::via_addition));
         }},
    }};

// ---------------------------------------------------------------------------
// topology
// ---------------------------------------------------------------------------

constexpr double kTopologyEps[4] = {0.1, 0.5, 1.0, 2.0};

Inputs draw_topology(SampleRng& rng, int dim, const VerifyConfig& cfg) {
  Inputs in;
  in.vecs.reserve(8);
  for (const double eps : kTopologyEps) {
    in.vecs.push_back(rng.ball_point(dim, cfg.r_max).coords());
    in.vecs.push_back(rng.ball_point(dim, std::tanh(eps)).coords());
  }
  return in;
}

const SuiteDef kTopology{
    "topology",
    1e-12,
    &draw_topology,
    {
        {"ball_containment", true, 0.0,
         +[](int, const Inputs& in) {
           double worst = 0.0;
           for (int i = 0; i < 4; ++i) {
             const double eps = kTopologyEps[i];
             const BallVector u = P(in, 2 * i), w = P(in, 2 * i + 1);
             const BallVector v = mobius_add_direct(u, w);
             if (metric_T(u, v) < dT_radius_for_dM(eps)) {
               worst = std::max(
                   worst, std::max(0.0, rapidity_metric(u, v) - eps));
             }
           }
           return worst;
         }},
    }};

// ---------------------------------------------------------------------------
// backend_equiv
// ---------------------------------------------------------------------------

Inputs draw_triple(SampleRng& rng, int dim, const VerifyConfig& cfg) {
  return draw_balls(rng, dim, cfg, 3);
}

const SuiteDef kBackendEquiv{
    "backend_equiv",
    1e-12,
    &draw_triple,
    {
        {"addition_backends", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector u = P(in, 0), v = P(in, 1);
           return vres(mobius_add_direct(u, v), mobius_add_clifford(u, v));
         }},
        {"gyration_backends", true, 0.0,
         +[](int, const Inputs& in) {
           const BallVector u = P(in, 0), v = P(in, 1), w = P(in, 2);
           return vres(gyration_apply({u, v}, w, GyrBackend::rotor),
                       gyration_apply({u, v}, w, GyrBackend::gyrator_identity));
         }},
    }};

// ---------------------------------------------------------------------------
// isometry_group
// ---------------------------------------------------------------------------

// Vector layout: u, v, w translate the three test isometries; x anchors the
// point symmetry; y is the transport target; p, q probe metric preservation;
// then eight probe points.
constexpr int IU = 0, IV = 1, IW = 2, IX = 3, IY = 4, IP = 5, IQ = 6, IP0 = 7;

Inputs draw_isometry(SampleRng& rng, int dim, const VerifyConfig& cfg) {
  Inputs in = draw_balls(rng, dim, cfg, IP0 + NPROBES);
  in.mats.reserve(3);
  for (int i = 0; i < 3; ++i) in.mats.push_back(rng.orthogonal_matrix(dim));
  return in;
}

Isometry iso(const Inputs& in, int vec_i, int mat_i) {
  return Isometry(P(in, vec_i), OrthogonalMap(in.mats[mat_i]));
}

double canon_res(const Isometry& a, const Isometry& b) {
  return std::max(
      vector_residual(a.translation().coords(), b.translation().coords()),
      matrix_residual(a.rotation().matrix(), b.rotation().matrix()));
}

const SuiteDef kIsometryGroup{
    "isometry_group",
    1e-9,
    &draw_isometry,
    {
        {"compose_pointwise", false, 1e-10,
         +[](int, const Inputs& in) {
           const Isometry s = iso(in, IU, 0), t = iso(in, IV, 1);
           const Isometry st = compose(s, t);
           double worst = 0.0;
           for (int i = 0; i < NPROBES; ++i) {
             const BallVector p = P(in, IP0 + i);
             worst = std::max(worst, vres(st.apply(p), s.apply(t.apply(p))));
           }
           return worst;
         }},
        {"inverse_identity", false, 1e-10,
         +[](int dim, const Inputs& in) {
           const Isometry t = iso(in, IV, 1);
           const Isometry ti = inverse(t);
           const Isometry id = Isometry::identity(dim);
           return std::max(canon_res(compose(t, ti), id),
                           canon_res(compose(ti, t), id));
         }},
        {"associativity", true, 0.0,
         +[](int, const Inputs& in) {
           const Isometry r = iso(in, IW, 2), s = iso(in, IU, 0),
                          t = iso(in, IV, 1);
           return canon_res(compose(compose(r, s), t),
                            compose(r, compose(s, t)));
         }},
        {"metric_preservation", false, 1e-9,
         +[](int, const Inputs& in) {
           const Isometry s = iso(in, IU, 0);
           const BallVector p = P(in, IP), q = P(in, IQ);
           const BallVector sp = s.apply(p), sq = s.apply(q);
           double worst = 0.0;
           for (const MetricKind kind :
                {MetricKind::gyrometric, MetricKind::rapidity,
                 MetricKind::poincare, MetricKind::arctan}) {
             worst = std::max(worst, scalar_residual(distance(kind, sp, sq),
                                                     distance(kind, p, q)));
           }
           return worst;
         }},
        {"orthogonal_automorphism", false, 1e-10,
         +[](int, const Inputs& in) {
           const OrthogonalMap alpha(in.mats[0]);
           const BallVector p = P(in, IP), q = P(in, IQ);
           return vres(apply(alpha, mobius_add_direct(p, q)),
                       mobius_add_direct(apply(alpha, p), apply(alpha, q)));
         }},
        {"symmetry_fixed_point", false, 1e-12,
         +[](int, const Inputs& in) {
           const BallVector x = P(in, IX);
           return vres(symmetry_at(x).apply(x), x);
         }},
        {"symmetry_involution", false, 1e-10,
         +[](int dim, const Inputs& in) {
           const Isometry sx = symmetry_at(P(in, IX));
           return canon_res(compose(sx, sx), Isometry::identity(dim));
         }},
        {"symmetry_unique_fixed_point", false, 0.0,
         +[](int, const Inputs& in) {
           const BallVector x = P(in, IX), y = P(in, IY);
           if ((y.coords() - x.coords()).norm() <= 1e-6) return 0.0;
           const double displacement = vres(symmetry_at(x).apply(y), y);
           return std::max(0.0, 1e-10 - displacement);
         }},
        {"transport_maps_source", false, 1e-12,
         +[](int, const Inputs& in) {
           const BallVector x = P(in, IX), y = P(in, IY);
           return vres(transport(x, y).apply(x), y);
         }},
        {"group_identity", false, 1e-12,
         +[](int dim, const Inputs& in) {
           const Isometry t = iso(in, IV, 1);
           const Isometry id = Isometry::identity(dim);
           return std::max(canon_res(compose(id, t), t),
                           canon_res(compose(t, id), t));
         }},
    }};

// ---------------------------------------------------------------------------
// clifford_core
// ---------------------------------------------------------------------------

// Vector layout: a, b, c, d span eta and anticommutator checks (bounded away
// from zero), w, x are unconstrained cube vectors, u, v are ball points for
// rotor-based checks. Reals carry three sparse multivectors as (mask, coeff)
// pairs, sixteen per element.
constexpr int CA = 0, CB = 1, CC = 2, CD = 3, CW = 4, CX = 5, CU = 6, CV = 7;
constexpr int kMvTerms = 16;

Inputs draw_clifford(SampleRng& rng, int dim, const VerifyConfig& cfg) {
  Inputs in;
  in.vecs.reserve(8);
  for (int i = 0; i < 4; ++i) {
    Vec v(dim);
    do {
      for (int k = 0; k < dim; ++k) v[k] = rng.uniform(-1.0, 1.0);
    } while (v.norm() < 0.1);
    in.vecs.push_back(std::move(v));
  }
  for (int i = 0; i < 2; ++i) {
    Vec v(dim);
    for (int k = 0; k < dim; ++k) v[k] = rng.uniform(-1.0, 1.0);
    in.vecs.push_back(std::move(v));
  }
  for (int i = 0; i < 2; ++i) {
    in.vecs.push_back(rng.ball_point(dim, cfg.r_max).coords());
  }
  const std::uint64_t mask_limit = (std::uint64_t{1} << dim) - 1;
  in.reals.reserve(3 * 2 * kMvTerms);
  for (int m = 0; m < 3; ++m) {
    for (int t = 0; t < kMvTerms; ++t) {
      in.reals.push_back(static_cast<double>(rng.next() & mask_limit));
      in.reals.push_back(rng.uniform(-1.0, 1.0));
    }
  }
  return in;
}

Multivector mv_from_reals(int dim, const Inputs& in, int which) {
  Multivector m(dim);
  const int base = which * 2 * kMvTerms;
  for (int t = 0; t < kMvTerms; ++t) {
    const auto mask = static_cast<std::uint32_t>(in.reals[base + 2 * t]);
    m[mask] += in.reals[base + 2 * t + 1];
  }
  return m;
}

double mv_residual(const Multivector& p, const Multivector& q) {
  double r = 0.0;
  for (int k = 0; k < p.ncoeffs(); ++k) {
    r = std::max(r, scalar_residual(p[static_cast<std::uint32_t>(k)],
                                    q[static_cast<std::uint32_t>(k)]));
  }
  return r;
}

const SuiteDef kCliffordCore{
    "clifford_core",
    1e-12,
    &draw_clifford,
    {
        {"anticommutator", true, 0.0,
         +[](int dim, const Inputs& in) {
           const Multivector a = embed_vector(in.vecs[CA]);
           const Multivector b = embed_vector(in.vecs[CB]);
           const Multivector expected = Multivector::scalar(
               dim, -2.0 * in.vecs[CA].dot(in.vecs[CB]));
           return mv_residual(a * b + b * a, expected);
         }},
        {"vector_square", true, 0.0,
         +[](int dim, const Inputs& in) {
           const Multivector a = embed_vector(in.vecs[CA]);
           return mv_residual(
               a * a, Multivector::scalar(dim, -in.vecs[CA].squaredNorm()));
         }},
        {"eta_multiplicative", true, 0.0,
         +[](int, const Inputs& in) {
           const Multivector g =
               embed_vector(in.vecs[CA]) * embed_vector(in.vecs[CB]);
           const Multivector h =
               embed_vector(in.vecs[CC]) * embed_vector(in.vecs[CD]);
           return scalar_residual(eta(g * h), eta(g) * eta(h));
         }},
        {"involution_roundtrips", false, 0.0,
         +[](int dim, const Inputs& in) {
           const Multivector m = mv_from_reals(dim, in, 0);
           const double r1 = (reversion(reversion(m)) - m).max_abs();
           const double r2 =
               (grade_involution(grade_involution(m)) - m).max_abs();
           const double r3 = (conjugation(conjugation(m)) - m).max_abs();
           return std::max({r1, r2, r3});
         }},
        {"conjugation_composition", false, 0.0,
         +[](int dim, const Inputs& in) {
           const Multivector m = mv_from_reals(dim, in, 0);
           return (conjugation(m) - reversion(grade_involution(m))).max_abs();
         }},
        {"product_associativity", true, 0.0,
         +[](int dim, const Inputs& in) {
           const Multivector m1 = mv_from_reals(dim, in, 0);
           const Multivector m2 = mv_from_reals(dim, in, 1);
           const Multivector m3 = mv_from_reals(dim, in, 2);
           return mv_residual((m1 * m2) * m3, m1 * (m2 * m3));
         }},
        {"one_minus_uv_inversion", true, 0.0,
         +[](int dim, const Inputs& in) {
           const Multivector m = one_minus_uv(in.vecs[CU], in.vecs[CV]);
           const Multivector inv =
               one_minus_uv_inverse(in.vecs[CU], in.vecs[CV]);
           return mv_residual(m * inv, Multivector::scalar(dim, 1.0));
         }},
        {"eta_quotient", true, 0.0,
         +[](int, const Inputs& in) {
           const Multivector m = one_minus_uv(in.vecs[CU], in.vecs[CV]);
           const Multivector inv =
               one_minus_uv_inverse(in.vecs[CU], in.vecs[CV]);
           const double lhs = eta(embed_vector(in.vecs[CW]) * inv);
           return scalar_residual(lhs, in.vecs[CW].squaredNorm() / eta(m));
         }},
        {"group_membership", false, 0.5,
         +[](int, const Inputs& in) {
           const bool ok =
               clifford_group_membership(
                   one_minus_uv(in.vecs[CU], in.vecs[CV])) &&
               clifford_group_membership(embed_vector(in.vecs[CA]));
           return ok ? 0.0 : 1.0;
         }},
        {"rotor_unit_eta", true, 0.0,
         +[](int, const Inputs& in) {
           const Rotor g = gyration_rotor({P(in, CU), P(in, CV)});
           return std::abs(g.eta_value() - 1.0);
         }},
        {"gyr_matrix_orthogonal", false, 1e-10,
         +[](int, const Inputs& in) {
           return gyration_matrix({P(in, CU), P(in, CV)})
               .orthogonality_defect();
         }},
        {"sandwich_preserves_norm", false, 1e-10,
         +[](int, const Inputs& in) {
           const Rotor g = gyration_rotor({P(in, CU), P(in, CV)});
           const double r1 = scalar_residual(g.apply(in.vecs[CW]).norm(),
                                             in.vecs[CW].norm());
           const double r2 = scalar_residual(
               sandwich(embed_vector(in.vecs[CA]), in.vecs[CW]).norm(),
               in.vecs[CW].norm());
           return std::max(r1, r2);
         }},
        {"sandwich_preserves_inner", false, 1e-10,
         +[](int, const Inputs& in) {
           const Rotor g = gyration_rotor({P(in, CU), P(in, CV)});
           const Vec gw = g.apply(in.vecs[CW]);
           const Vec gx = g.apply(in.vecs[CX]);
           return scalar_residual(gw.dot(gx), in.vecs[CW].dot(in.vecs[CX]));
         }},
    },
    +[](int, const Inputs& in, std::map<std::string, InfoRange>& acc) {
      acc_info(acc, "gyr_det",
               gyration_matrix({P(in, CU), P(in, CV)}).determinant());
    }};

// ---------------------------------------------------------------------------
// Registry and scan engine.
// ---------------------------------------------------------------------------

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> suites{
      kAxioms,  kTable1,       kInequality,   kGyronorm,     kDTMetric,
      kTopology, kBackendEquiv, kIsometryGroup, kCliffordCore,
  };
  return suites;
}

const SuiteDef& find_suite(const std::string& name) {
  for (const SuiteDef& s : registry()) {
    if (name == s.name) return s;
  }
  std::string known;
  for (const SuiteDef& s : registry()) {
    if (!known.empty()) known += ", ";
    known += s.name;
  }
  throw UnknownSuite("unknown suite '" + name + "' (known: " + known + ")");
}

double resolve_tol(const SuiteDef& suite, const Check& check,
                   const VerifyConfig& cfg) {
  if (!check.overridable) return check.fixed_tol;
  const auto it = cfg.tolerance_overrides.find(suite.name);
  return it != cfg.tolerance_overrides.end() ? it->second : suite.primary_tol;
}

void validate_config(const VerifyConfig& cfg) {
  if (cfg.samples < 1) throw Error("samples must be >= 1");
  if (cfg.dims.empty()) throw Error("at least one dimension is required");
  for (const int d : cfg.dims) {
    if (d < 1 || d > dim_max) {
      throw Error("dimension " + std::to_string(d) + " outside [1, " +
                  std::to_string(dim_max) + "]");
    }
  }
  if (!(cfg.r_max > 0.0 && cfg.r_max < 1.0)) {
    throw Error("r_max must lie in (0, 1)");
  }
  if (cfg.threads < 0) throw Error("threads must be >= 0");
}

struct FirstFailure {
  std::int64_t sample;
  int check;
  double residual;
};

struct ChunkResult {
  long failures = 0;
  double max_residual = 0.0;
  std::optional<FirstFailure> first;
  std::map<std::string, InfoRange> info;
};

ChunkResult scan_range(const SuiteDef& suite, int dim,
                       const VerifyConfig& cfg,
                       const std::vector<double>& tols, std::int64_t lo,
                       std::int64_t hi) {
  ChunkResult out;
  for (std::int64_t k = lo; k < hi; ++k) {
    SampleRng rng(cfg.seed, suite.name, dim, static_cast<std::uint64_t>(k));
    const Inputs in = suite.draw(rng, dim, cfg);
    bool failed = false;
    for (std::size_t ci = 0; ci < suite.checks.size(); ++ci) {
      double r;
      try {
        r = suite.checks[ci].eval(dim, in);
      } catch (const Error&) {
        r = std::numeric_limits<double>::infinity();
      }
      out.max_residual = std::max(out.max_residual, r);
      if (!(r <= tols[ci])) {
        failed = true;
        if (!out.first) {
          out.first = FirstFailure{k, static_cast<int>(ci), r};
        }
      }
    }
    if (failed) ++out.failures;
    if (suite.info != nullptr) suite.info(dim, in, out.info);
  }
  return out;
}

nlohmann::ordered_json inputs_to_json(const Inputs& in) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json vecs = nlohmann::ordered_json::array();
  for (const Vec& v : in.vecs) {
    vecs.push_back(std::vector<double>(v.begin(), v.end()));
  }
  j["vecs"] = std::move(vecs);
  nlohmann::ordered_json mats = nlohmann::ordered_json::array();
  for (const Mat& m : in.mats) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      std::vector<double> row(m.cols());
      for (Eigen::Index c = 0; c < m.cols(); ++c) row[c] = m(r, c);
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  j["mats"] = std::move(mats);
  j["reals"] = in.reals;
  return j;
}

Inputs inputs_from_json(const nlohmann::json& j) {
  Inputs in;
  for (const auto& jv : j.at("vecs")) {
    Vec v(jv.size());
    for (std::size_t i = 0; i < jv.size(); ++i) v[i] = jv[i].get<double>();
    in.vecs.push_back(std::move(v));
  }
  for (const auto& jm : j.at("mats")) {
    const auto rows = jm.size();
    const auto cols = rows > 0 ? jm[0].size() : 0;
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = jm[r][c].get<double>();
      }
    }
    in.mats.push_back(std::move(m));
  }
  for (const auto& jr : j.at("reals")) in.reals.push_back(jr.get<double>());
  return in;
}

nlohmann::ordered_json make_witness(const SuiteDef& suite, int dim,
                                    const VerifyConfig& cfg,
                                    const FirstFailure& f, double tolerance) {
  SampleRng rng(cfg.seed, suite.name, dim,
                static_cast<std::uint64_t>(f.sample));
  const Inputs in = suite.draw(rng, dim, cfg);
  nlohmann::ordered_json w;
  w["suite"] = suite.name;
  w["dim"] = dim;
  w["sample"] = f.sample;
  w["check"] = suite.checks[f.check].name;
  w["residual"] = f.residual;
  w["tolerance"] = tolerance;
  w["inputs"] = inputs_to_json(in);
  return w;
}

VerifyReport run_one(const SuiteDef& suite, int dim,
                     const VerifyConfig& cfg) {
  std::vector<double> tols;
  tols.reserve(suite.checks.size());
  for (const Check& c : suite.checks) tols.push_back(resolve_tol(suite, c, cfg));

  int threads = cfg.threads;
  if (threads == 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
  }
  threads = std::clamp(threads, 1, 64);
  threads = static_cast<int>(
      std::min<std::int64_t>(threads, cfg.samples));

  ChunkResult merged;
  if (threads == 1) {
    merged = scan_range(suite, dim, cfg, tols, 0, cfg.samples);
  } else {
    std::vector<std::future<ChunkResult>> futures;
    futures.reserve(threads);
    const std::int64_t total = cfg.samples;
    for (int c = 0; c < threads; ++c) {
      const std::int64_t lo = total * c / threads;
      const std::int64_t hi = total * (c + 1) / threads;
      futures.push_back(std::async(std::launch::async, [&, lo, hi] {
        return scan_range(suite, dim, cfg, tols, lo, hi);
      }));
    }
    // Chunks cover increasing sample ranges, so merging in chunk order keeps
    // the earliest failure and a partition-independent maximum.
    for (auto& fut : futures) {
      ChunkResult part = fut.get();
      merged.failures += part.failures;
      merged.max_residual = std::max(merged.max_residual, part.max_residual);
      if (!merged.first && part.first) merged.first = part.first;
      for (const auto& [key, range] : part.info) {
        acc_info(merged.info, key.c_str(), range.min_value);
        acc_info(merged.info, key.c_str(), range.max_value);
      }
    }
  }

  VerifyReport report;
  report.suite = suite.name;
  report.dim = dim;
  report.samples = cfg.samples;
  report.failures = merged.failures;
  report.max_residual = merged.max_residual;
  report.info = std::move(merged.info);
  if (merged.first) {
    report.first_failure_witness = make_witness(
        suite, dim, cfg, *merged.first, tols[merged.first->check]);
  }
  return report;
}

std::vector<VerifyReport> run_suite_def(const SuiteDef& suite,
                                        const VerifyConfig& cfg) {
  std::vector<VerifyReport> reports;
  reports.reserve(cfg.dims.size());
  for (const int dim : cfg.dims) {
    reports.push_back(run_one(suite, dim, cfg));
  }
  return reports;
}

}  // namespace

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["dim"] = dim;
  j["samples"] = samples;
  j["failures"] = failures;
  j["max_residual"] = max_residual;
  if (first_failure_witness) {
    j["first_failure_witness"] = *first_failure_witness;
  }
  return j;
}

std::vector<std::string> registered_suites() {
  std::vector<std::string> names;
  names.reserve(registry().size());
  for (const SuiteDef& s : registry()) names.emplace_back(s.name);
  return names;
}

std::vector<VerifyReport> run_suite(const std::string& name,
                                    const VerifyConfig& cfg) {
  validate_config(cfg);
  return run_suite_def(find_suite(name), cfg);
}

std::vector<VerifyReport> run_all(const VerifyConfig& cfg) {
  validate_config(cfg);
  std::vector<VerifyReport> reports;
  for (const SuiteDef& suite : registry()) {
    auto part = run_suite_def(suite, cfg);
    reports.insert(reports.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
  }
  return reports;
}

bool all_passed(const std::vector<VerifyReport>& reports) {
  for (const VerifyReport& r : reports) {
    if (r.failures != 0) return false;
  }
  return true;
}

std::string to_jsonl(const std::vector<VerifyReport>& reports) {
  std::string out;
  for (const VerifyReport& r : reports) {
    out += r.to_json().dump();
    out += '\n';
  }
  return out;
}

std::string report_table(const std::vector<VerifyReport>& reports) {
  std::string out =
      "suite            dim   samples  failures  max-residual  status\n";
  char buf[192];
  for (const VerifyReport& r : reports) {
    std::snprintf(buf, sizeof buf, "%-16s %3d  %8d  %8ld  %12.3e  %s\n",
                  r.suite.c_str(), r.dim, r.samples, r.failures,
                  r.max_residual, r.failures == 0 ? "ok" : "FAIL");
    out += buf;
    for (const auto& [key, range] : r.info) {
      std::snprintf(buf, sizeof buf, "    %s range [%.12g, %.12g]\n",
                    key.c_str(), range.min_value, range.max_value);
      out += buf;
    }
  }
  return out;
}

double replay_witness(const nlohmann::json& witness) {
  if (!witness.is_object() || !witness.contains("suite") ||
      !witness.contains("check") || !witness.contains("dim") ||
      !witness.contains("inputs")) {
    throw Error("witness must carry suite, check, dim and inputs fields");
  }
  const SuiteDef& suite = find_suite(witness["suite"].get<std::string>());
  const std::string check_name = witness["check"].get<std::string>();
  const Check* check = nullptr;
  for (const Check& c : suite.checks) {
    if (check_name == c.name) {
      check = &c;
      break;
    }
  }
  if (check == nullptr) {
    throw Error("suite '" + std::string(suite.name) + "' has no check '" +
                check_name + "'");
  }
  const int dim = witness["dim"].get<int>();
  const Inputs in = inputs_from_json(witness["inputs"]);
  try {
    return check->eval(dim, in);
  } catch (const Error&) {
    // The scan records library errors as infinite residuals; replay mirrors
    // that encoding.
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace gyroball
