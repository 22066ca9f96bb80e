#pragma once

namespace gyroball::tol {

// Numerical tolerances used throughout the library. Values are absolute
// unless a caller rescales them; residual helpers switch to relative error
// once magnitudes exceed one.

inline constexpr double alg = 1e-12;      // algebraic identities on multivectors
inline constexpr double scalar = 1e-10;   // scalar purity of eta
inline constexpr double grade = 1e-10;    // grade-1 extraction
inline constexpr double sing = 1e-9;      // denominator / singularity guard
inline constexpr double ball = 1e-12;     // open-ball safety margin
inline constexpr double orth = 1e-10;     // orthogonality defect
inline constexpr double backend = 1e-12;  // cross-backend agreement
inline constexpr double eq = 1e-9;        // isometry equality

}  // namespace gyroball::tol
