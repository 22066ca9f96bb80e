#pragma once

#include "gyroball/errors.hpp"
#include "gyroball/tolerances.hpp"
#include "gyroball/types.hpp"

namespace gyroball {

/// Element of O(n), validated at construction.
class OrthogonalMap {
 public:
  /// Throws NotOrthogonal when ||M^T M - I||_inf exceeds `tolerance`.
  explicit OrthogonalMap(Mat m, double tolerance = tol::orth);

  static OrthogonalMap identity(int dim);
  /// The point reflection -I.
  static OrthogonalMap inversion(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Mat& matrix() const { return m_; }

  Vec apply(const Vec& x) const;
  OrthogonalMap inverse() const;
  OrthogonalMap operator*(const OrthogonalMap& rhs) const;

  double determinant() const;
  /// ||M^T M - I||_inf, useful for diagnostics.
  double orthogonality_defect() const;

 private:
  struct unchecked_t {};
  OrthogonalMap(Mat m, unchecked_t) : m_(std::move(m)) {}

  Mat m_;
};

/// Projects an invertible matrix onto its nearest orthogonal factor by
/// Newton iteration X <- (X + X^{-T}) / 2. Throws NotOrthogonal when the
/// input is singular or the iteration fails to converge.
OrthogonalMap reorthonormalize(Mat m, double tolerance = tol::orth);

}  // namespace gyroball
