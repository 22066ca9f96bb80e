#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gyroball/errors.hpp"
#include "gyroball/tolerances.hpp"
#include "gyroball/types.hpp"

namespace gyroball {

/// Dense element of the Clifford algebra Cl(0,n), where every generator
/// squares to -1 and distinct generators anticommute.
///
/// Coefficients are indexed by blade bitmask: bit i of the index selects the
/// generator e_{i+1}, so index 0 is the scalar blade and index 0b11 is e1e2.
/// The coefficient array always holds 2^dim entries.
class Multivector {
 public:
  /// Zero element of Cl(0,dim). Throws Error unless 1 <= dim <= dim_max.
  explicit Multivector(int dim);

  static Multivector scalar(int dim, double value);
  static Multivector basis_blade(int dim, std::uint32_t mask,
                                 double coefficient = 1.0);

  int dim() const { return dim_; }
  /// Number of blade coefficients, 2^dim.
  int ncoeffs() const { return static_cast<int>(coeffs_.size()); }

  double operator[](std::uint32_t mask) const { return coeffs_[mask]; }
  double& operator[](std::uint32_t mask) { return coeffs_[mask]; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  double scalar_part() const { return coeffs_[0]; }
  double max_abs() const;

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(double s);
  Multivector& operator/=(double s);

  /// Renders e.g. "1 - 0.25*e12"; the zero element renders as "0".
  std::string to_string() const;

 private:
  int dim_;
  std::vector<double> coeffs_;
};

Multivector operator+(Multivector lhs, const Multivector& rhs);
Multivector operator-(Multivector lhs, const Multivector& rhs);
Multivector operator*(Multivector lhs, double s);
Multivector operator*(double s, Multivector rhs);
Multivector operator/(Multivector lhs, double s);

/// Product of two basis blades given as bitmasks: returns the sign (+1/-1)
/// and the bitmask of the resulting blade (the XOR of the operands).
std::pair<int, std::uint32_t> blade_product(std::uint32_t a, std::uint32_t b);

Multivector geometric_product(const Multivector& a, const Multivector& b);

inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

/// Reverses the generator order in each blade: sign (-1)^(k(k-1)/2) at grade k.
Multivector reversion(const Multivector& a);

/// Flips the sign of each generator: sign (-1)^k at grade k.
Multivector grade_involution(const Multivector& a);

/// Clifford conjugation, the composition of the two maps above.
Multivector conjugation(const Multivector& a);

/// Scalar part of a * conjugation(a). Throws NonScalarEta when the product
/// carries blade content above `tolerance` relative to max(1, |scalar|).
double eta(const Multivector& a, double tolerance = tol::scalar);

/// sqrt(eta(a)). Throws NegativeEta when eta(a) < -tolerance.
double modulus(const Multivector& a, double tolerance = tol::scalar);

/// Embeds a coordinate vector as a grade-1 multivector.
Multivector embed_vector(const Vec& v);

/// Extracts the grade-1 coefficients. Throws NotAVector when any coefficient
/// at another grade exceeds `tolerance` relative to max(1, vector part).
Vec extract_vector(const Multivector& a, double tolerance = tol::grade);

/// The element 1 - uv for coordinate vectors u, v.
Multivector one_minus_uv(const Vec& u, const Vec& v);

/// (1 - uv)^{-1} = (1 - vu) / eta(1 - uv). Throws SingularDenominator when
/// |1 - |u||v|| <= tol::sing or eta(1 - uv) < tol::sing^2.
Multivector one_minus_uv_inverse(const Vec& u, const Vec& v);

/// conjugation(g) / eta(g). Throws SingularDenominator when |eta| is within
/// the guard band, NonScalarEta when eta is not scalar.
Multivector clifford_inverse(const Multivector& g);

/// True iff eta(g) is a nonzero scalar and the twisted sandwich of every
/// basis vector by g lands at grade 1, i.e. g lies in the Clifford group.
bool clifford_group_membership(const Multivector& g,
                               double grade_tolerance = tol::grade);

/// q w q^{-1} for a grade-1 w, returned in coordinates.
Vec sandwich(const Multivector& q, const Vec& w);

/// Unit-eta element of grades {0, 2} acting on vectors by sandwich.
class Rotor {
 public:
  /// Normalizes `candidate` by its modulus. Throws Error when the support is
  /// not confined to grades 0 and 2, SingularDenominator when the modulus
  /// vanishes, NonScalarEta when eta is not scalar.
  explicit Rotor(const Multivector& candidate);

  const Multivector& mv() const { return mv_; }
  /// Cached eta of the normalized element; equal to 1 within tol::scalar.
  double eta_value() const { return eta_; }
  int dim() const { return mv_.dim(); }

  Vec apply(const Vec& w) const;

 private:
  Multivector mv_;
  Multivector inv_;
  double eta_;
};

}  // namespace gyroball
