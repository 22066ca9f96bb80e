#pragma once

#include <cstdint>
#include <string_view>

#include "gyroball/gyro.hpp"
#include "gyroball/types.hpp"

namespace gyroball {

/// Counter-based deterministic sample generator.
///
/// Each (seed, suite, dim, sample) tuple keys an independent stream, so any
/// sample can be regenerated in isolation: verification scans stay bitwise
/// reproducible under any thread partitioning, and a failure witness replays
/// without rerunning the scan.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::string_view suite, int dim,
            std::uint64_t sample);

  std::uint64_t next();

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();
  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller; two uniforms per call, no caching.
  double normal();

  /// Uniform direction on the unit sphere S^{n-1}.
  Vec sphere_direction(int n);

  /// Volume-uniform point with radius r_max * s^{1/n}, s uniform.
  BallVector ball_point(int n, double r_max);

  /// Haar-distributed rotation from the QR factorization of a Gaussian
  /// matrix, with the determinant sign randomized to cover both components
  /// of O(n).
  Mat orthogonal_matrix(int n);

 private:
  std::uint64_t state_;
};

}  // namespace gyroball
