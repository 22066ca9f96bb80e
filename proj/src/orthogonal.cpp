#include "gyroball/orthogonal.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

namespace gyroball {

namespace {

double defect_of(const Mat& m) {
  const Mat gram = m.transpose() * m;
  const Mat id = Mat::Identity(m.rows(), m.cols());
  return (gram - id).cwiseAbs().maxCoeff();
}

void check_shape(const Mat& m) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw Error("orthogonal map requires a square matrix, got " +
                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

OrthogonalMap::OrthogonalMap(Mat m, double tolerance) : m_(std::move(m)) {
  check_shape(m_);
  const double defect = defect_of(m_);
  if (!(defect <= tolerance)) {
    throw NotOrthogonal("orthogonality defect " + std::to_string(defect) +
                        " exceeds tolerance");
  }
}

OrthogonalMap OrthogonalMap::identity(int dim) {
  return OrthogonalMap(Mat::Identity(dim, dim), unchecked_t{});
}

OrthogonalMap OrthogonalMap::inversion(int dim) {
  return OrthogonalMap(-Mat::Identity(dim, dim), unchecked_t{});
}

Vec OrthogonalMap::apply(const Vec& x) const {
  if (x.size() != m_.rows()) {
    throw DimensionMismatch("vector of dimension " + std::to_string(x.size()) +
                            " applied to map of dimension " +
                            std::to_string(dim()));
  }
  return m_ * x;
}

OrthogonalMap OrthogonalMap::inverse() const {
  return OrthogonalMap(m_.transpose(), unchecked_t{});
}

OrthogonalMap OrthogonalMap::operator*(const OrthogonalMap& rhs) const {
  if (dim() != rhs.dim()) {
    throw DimensionMismatch("orthogonal map dimensions differ: " +
                            std::to_string(dim()) + " vs " +
                            std::to_string(rhs.dim()));
  }
  return OrthogonalMap(m_ * rhs.m_);
}

double OrthogonalMap::determinant() const { return m_.determinant(); }

double OrthogonalMap::orthogonality_defect() const { return defect_of(m_); }

OrthogonalMap reorthonormalize(Mat m, double tolerance) {
  check_shape(m);
  for (int iter = 0; iter < 60; ++iter) {
    if (defect_of(m) <= 0.1 * tolerance) break;
    const Eigen::FullPivLU<Mat> lu(m);
    if (!lu.isInvertible()) {
      throw NotOrthogonal("cannot reorthonormalize a singular matrix");
    }
    m = 0.5 * (m + lu.inverse().transpose());
  }
  return OrthogonalMap(std::move(m), tolerance);
}

}  // namespace gyroball
