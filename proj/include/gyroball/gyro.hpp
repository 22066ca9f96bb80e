#pragma once

#include "gyroball/clifford.hpp"
#include "gyroball/errors.hpp"
#include "gyroball/orthogonal.hpp"
#include "gyroball/tolerances.hpp"
#include "gyroball/types.hpp"

namespace gyroball {

/// Point strictly inside the open unit ball.
///
/// Alongside the coordinates the class carries the complement 1 - ||v||^2,
/// which Mobius addition propagates through the product identity
/// 1 - ||u (+) v||^2 = (1 - ||u||^2)(1 - ||v||^2) / eta(1 - uv). Recomputing
/// the complement from coordinates loses all relative accuracy close to the
/// boundary; the carried value does not.
class BallVector {
 public:
  /// Validates ||v|| < 1 - tol::ball. Throws OutsideBall otherwise.
  explicit BallVector(Vec coords);

  static BallVector zero(int dim);

  /// Wraps an internally computed result; throws NumericalEscape when the
  /// point rounded onto or past the boundary.
  static BallVector result(Vec coords);
  /// Same, with a complement already known more accurately than
  /// 1 - ||coords||^2 evaluates in floating point.
  static BallVector result(Vec coords, double complement);

  int dim() const { return static_cast<int>(coords_.size()); }
  const Vec& coords() const { return coords_; }
  double operator[](int i) const { return coords_[i]; }
  double norm() const { return coords_.norm(); }
  /// 1 - ||v||^2, kept accurate near the boundary.
  double complement() const { return comp_; }

  BallVector negated() const;

 private:
  BallVector(Vec coords, double comp) : coords_(std::move(coords)), comp_(comp) {}

  Vec coords_;
  double comp_;
};

/// Rescales a point onto radius 1 - tol::ball when it lies outside the open
/// ball; interior points pass through unchanged.
BallVector project_into_ball(Vec v);

enum class AddBackend { direct, clifford };
enum class GyrBackend { rotor, gyrator_identity };

/// Mobius addition evaluated coordinate-wise.
BallVector mobius_add_direct(const BallVector& u, const BallVector& v);

/// Mobius addition as (u + v)(1 - uv)^{-1} in Cl(0,n); requires
/// dim <= dim_max.
BallVector mobius_add_clifford(const BallVector& u, const BallVector& v);

BallVector mobius_add(const BallVector& u, const BallVector& v,
                      AddBackend backend = AddBackend::direct);

BallVector mobius_neg(const BallVector& v);

/// The pair generating the gyration gyr[u, v].
struct GyrationSpec {
  BallVector u;
  BallVector v;
};

/// Normalized rotor (1 - uv)/|1 - uv|; requires dim <= dim_max.
Rotor gyration_rotor(const GyrationSpec& spec);

/// Applies gyr[u, v] to w, either by rotor sandwich or through the gyrator
/// identity -(u (+) v) (+) (u (+) (v (+) w)). The identity backend works in
/// any dimension.
BallVector gyration_apply(const GyrationSpec& spec, const BallVector& w,
                          GyrBackend backend = GyrBackend::rotor);

/// Matrix of gyr[u, v] with columns gyr[u, v] e_i; requires dim <= dim_max.
OrthogonalMap gyration_matrix(const GyrationSpec& spec);

}  // namespace gyroball
