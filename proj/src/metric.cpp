#include "gyroball/metric.hpp"

#include <cmath>
#include <string>

namespace gyroball {

double artanh(double r) {
  if (!(r < 1.0 - tol::ball)) {
    throw NumericalEscape("artanh argument " + std::to_string(r) +
                          " at or beyond the boundary guard");
  }
  return 0.5 * std::log((1.0 + r) / (1.0 - r));
}

double gyrometric(const BallVector& x, const BallVector& y) {
  return mobius_add_direct(x.negated(), y).norm();
}

double rapidity_metric(const BallVector& x, const BallVector& y) {
  return artanh(gyrometric(x, y));
}

double poincare_metric(const BallVector& x, const BallVector& y,
                       PoincareMode mode) {
  if (mode == PoincareMode::via_addition) {
    return 2.0 * rapidity_metric(x, y);
  }
  if (x.dim() != y.dim()) {
    throw DimensionMismatch("ball vector dimensions differ: " +
                            std::to_string(x.dim()) + " vs " +
                            std::to_string(y.dim()));
  }
  const double d2 = (x.coords() - y.coords()).squaredNorm();
  return std::acosh(1.0 + 2.0 * d2 / (x.complement() * y.complement()));
}

double norm_T(const BallVector& v) { return std::atan(v.norm()); }

double metric_T(const BallVector& x, const BallVector& y) {
  return std::atan(gyrometric(x, y));
}

NormBounds norm_bounds(const BallVector& u, const BallVector& v) {
  const double a = u.norm();
  const double b = v.norm();
  return {(a - b) / (1.0 + a * b), (a + b) / (1.0 - a * b)};
}

double dT_radius_for_dM(double eps) {
  if (!(eps > 0.0)) {
    throw NonPositiveEps("eps must be positive, got " + std::to_string(eps));
  }
  return std::atan(std::tanh(eps));
}

double distance(MetricKind kind, const BallVector& x, const BallVector& y) {
  switch (kind) {
    case MetricKind::gyrometric:
      return gyrometric(x, y);
    case MetricKind::rapidity:
      return rapidity_metric(x, y);
    case MetricKind::poincare:
      return poincare_metric(x, y);
    case MetricKind::arctan:
      return metric_T(x, y);
  }
  throw Error("unhandled metric kind");
}

double gyrometric(const Vec& x, const Vec& y) {
  return gyrometric(BallVector(x), BallVector(y));
}

double rapidity_metric(const Vec& x, const Vec& y) {
  return rapidity_metric(BallVector(x), BallVector(y));
}

double poincare_metric(const Vec& x, const Vec& y, PoincareMode mode) {
  return poincare_metric(BallVector(x), BallVector(y), mode);
}

double norm_T(const Vec& v) { return norm_T(BallVector(v)); }

double metric_T(const Vec& x, const Vec& y) {
  return metric_T(BallVector(x), BallVector(y));
}

NormBounds norm_bounds(const Vec& u, const Vec& v) {
  return norm_bounds(BallVector(u), BallVector(v));
}

double distance(MetricKind kind, const Vec& x, const Vec& y) {
  return distance(kind, BallVector(x), BallVector(y));
}

}  // namespace gyroball
