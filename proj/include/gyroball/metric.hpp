#pragma once

#include "gyroball/gyro.hpp"
#include "gyroball/types.hpp"

namespace gyroball {

enum class MetricKind { gyrometric, rapidity, poincare, arctan };
enum class PoincareMode { closed_form, via_addition };

/// Inverse hyperbolic tangent with an escape guard at the boundary.
/// Throws NumericalEscape unless r < 1 - tol::ball.
double artanh(double r);

/// rho_M(x, y) = ||(-x) (+) y||, the gyrometric. Values lie in [0, 1).
double gyrometric(const BallVector& x, const BallVector& y);

/// artanh of the gyrometric.
double rapidity_metric(const BallVector& x, const BallVector& y);

/// Poincare distance, either by the closed form
/// acosh(1 + 2||x-y||^2 / ((1-||x||^2)(1-||y||^2))) or as twice the rapidity.
double poincare_metric(const BallVector& x, const BallVector& y,
                       PoincareMode mode = PoincareMode::closed_form);

/// ||v||_T = arctan ||v||.
double norm_T(const BallVector& v);

/// d_T(x, y) = arctan rho_M(x, y); bounded above by pi/2.
double metric_T(const BallVector& x, const BallVector& y);

struct NormBounds {
  double lower;  // (||u|| - ||v||) / (1 + ||u|| ||v||), may be negative
  double upper;  // (||u|| + ||v||) / (1 - ||u|| ||v||), may exceed 1
};

/// Two-sided bounds on ||u (+) v||, reported unclamped.
NormBounds norm_bounds(const BallVector& u, const BallVector& v);

/// Radius delta = arctan(tanh eps) such that the d_T-ball of radius delta
/// sits inside the rapidity ball of radius eps. Throws NonPositiveEps for
/// eps <= 0 or NaN.
double dT_radius_for_dM(double eps);

/// Metric selector; poincare uses the closed form.
double distance(MetricKind kind, const BallVector& x, const BallVector& y);

// Raw-coordinate overloads. Each validates its inputs and throws OutsideBall
// for points not strictly inside the ball.
double gyrometric(const Vec& x, const Vec& y);
double rapidity_metric(const Vec& x, const Vec& y);
double poincare_metric(const Vec& x, const Vec& y,
                       PoincareMode mode = PoincareMode::closed_form);
double norm_T(const Vec& v);
double metric_T(const Vec& x, const Vec& y);
NormBounds norm_bounds(const Vec& u, const Vec& v);
double distance(MetricKind kind, const Vec& x, const Vec& y);

}  // namespace gyroball
