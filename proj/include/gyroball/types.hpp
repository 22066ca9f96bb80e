#pragma once

#include <Eigen/Core>

namespace gyroball {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Largest supported coordinate dimension for the Clifford backend.
inline constexpr int dim_max = 12;

}  // namespace gyroball
