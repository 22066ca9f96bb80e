#pragma once

#include <algorithm>
#include <cmath>

#include "gyroball/errors.hpp"
#include "gyroball/types.hpp"

namespace gyroball {

// Residuals are absolute differences rescaled by max(1, magnitudes), so they
// read as absolute error inside the unit ball and relative error outside it.

inline double scalar_residual(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline double vector_residual(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("residual operands differ in dimension");
  }
  double r = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    r = std::max(r, scalar_residual(a[i], b[i]));
  }
  return r;
}

inline double matrix_residual(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("residual operands differ in shape");
  }
  double r = 0.0;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index row = 0; row < a.rows(); ++row) {
      r = std::max(r, scalar_residual(a(row, c), b(row, c)));
    }
  }
  return r;
}

}  // namespace gyroball
