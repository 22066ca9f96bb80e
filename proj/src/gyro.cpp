#include "gyroball/gyro.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace gyroball {

namespace {

// ||v|| < 1 - tol::ball expressed on the complement 1 - ||v||^2.
constexpr double kMinComplement = tol::ball * (2.0 - tol::ball);

void require_same_dim(const BallVector& a, const BallVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("ball vector dimensions differ: " +
                            std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

double complement_of(const Vec& coords) {
  return 1.0 - coords.squaredNorm();
}

}  // namespace

BallVector::BallVector(Vec coords) : coords_(std::move(coords)), comp_(0.0) {
  if (coords_.size() < 1) {
    throw Error("ball vector must have dimension >= 1");
  }
  comp_ = complement_of(coords_);
  if (!(comp_ > kMinComplement)) {
    throw OutsideBall("point with norm " + std::to_string(coords_.norm()) +
                      " is not strictly inside the unit ball");
  }
}

BallVector BallVector::zero(int dim) {
  if (dim < 1) throw Error("ball vector must have dimension >= 1");
  return BallVector(Vec::Zero(dim), 1.0);
}

BallVector BallVector::result(Vec coords) {
  const double comp = complement_of(coords);
  return result(std::move(coords), comp);
}

BallVector BallVector::result(Vec coords, double complement) {
  if (!(complement > kMinComplement)) {
    throw NumericalEscape("result rounded outside the open ball (complement " +
                          std::to_string(complement) + ")");
  }
  return BallVector(std::move(coords), complement);
}

BallVector BallVector::negated() const { return BallVector(-coords_, comp_); }

BallVector project_into_ball(Vec v) {
  if (v.size() < 1) throw Error("ball vector must have dimension >= 1");
  const double n = v.norm();
  if (n >= 1.0 - tol::ball) {
    v *= (1.0 - tol::ball) / n;
  }
  while (!(complement_of(v) > kMinComplement)) {
    v *= 1.0 - tol::ball;
  }
  return BallVector(std::move(v));
}

BallVector mobius_add_direct(const BallVector& u, const BallVector& v) {
  require_same_dim(u, v);
  // Expanded forms without catastrophic cancellation:
  //   den = 1 + 2<u,v> + |u|^2 |v|^2 = (1 - |u|^2)(1 - |v|^2) + |u + v|^2
  //   num = (1 + 2<u,v> + |v|^2) u + (1 - |u|^2) v
  //       = (1 - |u|^2)(u + v) + |u + v|^2 u
  const Vec sum = u.coords() + v.coords();
  const double s = sum.squaredNorm();
  const double cu = u.complement();
  const double cv = v.complement();
  const double den = cu * cv + s;
  const Vec num = cu * sum + s * u.coords();
  return BallVector::result(num / den, (cu * cv) / den);
}

BallVector mobius_add_clifford(const BallVector& u, const BallVector& v) {
  require_same_dim(u, v);
  const Multivector sum = embed_vector(u.coords() + v.coords());
  const Multivector inv = one_minus_uv_inverse(u.coords(), v.coords());
  return BallVector::result(extract_vector(geometric_product(sum, inv)));
}

BallVector mobius_add(const BallVector& u, const BallVector& v,
                      AddBackend backend) {
  return backend == AddBackend::direct ? mobius_add_direct(u, v)
                                       : mobius_add_clifford(u, v);
}

BallVector mobius_neg(const BallVector& v) { return v.negated(); }

Rotor gyration_rotor(const GyrationSpec& spec) {
  require_same_dim(spec.u, spec.v);
  return Rotor(one_minus_uv(spec.u.coords(), spec.v.coords()));
}

BallVector gyration_apply(const GyrationSpec& spec, const BallVector& w,
                          GyrBackend backend) {
  require_same_dim(spec.u, w);
  if (backend == GyrBackend::rotor) {
    // The sandwich preserves the norm, so w's complement carries over.
    return BallVector::result(gyration_rotor(spec).apply(w.coords()),
                              w.complement());
  }
  const BallVector uv = mobius_add_direct(spec.u, spec.v);
  const BallVector inner = mobius_add_direct(spec.v, w);
  const BallVector outer = mobius_add_direct(spec.u, inner);
  return mobius_add_direct(uv.negated(), outer);
}

OrthogonalMap gyration_matrix(const GyrationSpec& spec) {
  const Rotor q = gyration_rotor(spec);
  const int n = spec.u.dim();
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    m.col(i) = q.apply(Vec::Unit(n, i));
  }
  return OrthogonalMap(std::move(m));
}

}  // namespace gyroball
