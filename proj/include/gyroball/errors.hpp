#pragma once

#include <stdexcept>
#include <string>

namespace gyroball {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in different coordinate dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied point is not strictly inside the open unit ball.
class OutsideBall : public Error {
 public:
  using Error::Error;
};

/// An intermediate result rounded onto or beyond the ball boundary.
class NumericalEscape : public Error {
 public:
  using Error::Error;
};

/// eta(a) has non-scalar blade content above tolerance.
class NonScalarEta : public Error {
 public:
  using Error::Error;
};

/// eta(a) is a scalar but significantly negative, so no modulus exists.
class NegativeEta : public Error {
 public:
  using Error::Error;
};

/// A multivector expected to be grade-1 carries other grades.
class NotAVector : public Error {
 public:
  using Error::Error;
};

/// A denominator fell inside the singularity guard band.
class SingularDenominator : public Error {
 public:
  using Error::Error;
};

/// A matrix failed the orthogonality check.
class NotOrthogonal : public Error {
 public:
  using Error::Error;
};

/// A radius or scale parameter that must be positive is not.
class NonPositiveEps : public Error {
 public:
  using Error::Error;
};

/// A verification suite name is not registered.
class UnknownSuite : public Error {
 public:
  using Error::Error;
};

}  // namespace gyroball
