#include "gyroball/clifford.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace gyroball {

namespace {

void require_same_dim(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("multivector dimensions differ: " +
                            std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

int check_dim(int dim) {
  if (dim < 1 || dim > dim_max) {
    throw Error("dimension " + std::to_string(dim) + " outside [1, " +
                std::to_string(dim_max) + "]");
  }
  return dim;
}

// Sign tables by grade mod 4.
constexpr double kReversionSign[4] = {1.0, 1.0, -1.0, -1.0};
constexpr double kGradeSign[4] = {1.0, -1.0, 1.0, -1.0};
constexpr double kConjugationSign[4] = {1.0, -1.0, -1.0, 1.0};

Multivector apply_grade_signs(const Multivector& a, const double signs[4]) {
  Multivector out(a.dim());
  for (int k = 0; k < a.ncoeffs(); ++k) {
    const int g = std::popcount(static_cast<std::uint32_t>(k));
    out[static_cast<std::uint32_t>(k)] = signs[g % 4] * a[k];
  }
  return out;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

Multivector::Multivector(int dim)
    : dim_(check_dim(dim)), coeffs_(std::size_t{1} << dim, 0.0) {}

Multivector Multivector::scalar(int dim, double value) {
  Multivector m(dim);
  m.coeffs_[0] = value;
  return m;
}

Multivector Multivector::basis_blade(int dim, std::uint32_t mask,
                                     double coefficient) {
  Multivector m(dim);
  if (mask >= m.coeffs_.size()) {
    throw Error("blade mask " + std::to_string(mask) +
                " out of range for dimension " + std::to_string(dim));
  }
  m.coeffs_[mask] = coefficient;
  return m;
}

double Multivector::max_abs() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Multivector Multivector::operator-() const {
  Multivector out(dim_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = -coeffs_[k];
  return out;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

Multivector& Multivector::operator/=(double s) {
  for (double& c : coeffs_) c /= s;
  return *this;
}

std::string Multivector::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double c = coeffs_[k];
    if (c == 0.0) continue;
    const double mag = std::abs(c);
    if (first) {
      if (c < 0.0) out << "-";
      first = false;
    } else {
      out << (c < 0.0 ? " - " : " + ");
    }
    if (k == 0) {
      out << format_double(mag);
    } else {
      if (mag != 1.0) out << format_double(mag) << "*";
      out << "e";
      for (int i = 0; i < dim_; ++i) {
        if (k & (std::size_t{1} << i)) out << (i + 1);
      }
    }
  }
  if (first) return "0";
  return out.str();
}

Multivector operator+(Multivector lhs, const Multivector& rhs) {
  lhs += rhs;
  return lhs;
}

Multivector operator-(Multivector lhs, const Multivector& rhs) {
  lhs -= rhs;
  return lhs;
}

Multivector operator*(Multivector lhs, double s) {
  lhs *= s;
  return lhs;
}

Multivector operator*(double s, Multivector rhs) {
  rhs *= s;
  return rhs;
}

Multivector operator/(Multivector lhs, double s) {
  lhs /= s;
  return lhs;
}

std::pair<int, std::uint32_t> blade_product(std::uint32_t a, std::uint32_t b) {
  // Transpositions needed to interleave the generators of b past those of a,
  // plus one sign flip per annihilated pair since each generator squares
  // to -1.
  int swaps = 0;
  std::uint32_t x = a >> 1;
  while (x != 0) {
    swaps += std::popcount(x & b);
    x >>= 1;
  }
  swaps += std::popcount(a & b);
  const int sign = (swaps % 2 == 0) ? 1 : -1;
  return {sign, a ^ b};
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  require_same_dim(a, b);
  Multivector out(a.dim());
  const int n = a.ncoeffs();
  // Most operands are sparse (vectors, rotors), so gather support first
  // instead of scanning the 2^n x 2^n grid.
  std::vector<std::uint32_t> as, bs;
  for (int i = 0; i < n; ++i) {
    if (a[static_cast<std::uint32_t>(i)] != 0.0) {
      as.push_back(static_cast<std::uint32_t>(i));
    }
    if (b[static_cast<std::uint32_t>(i)] != 0.0) {
      bs.push_back(static_cast<std::uint32_t>(i));
    }
  }
  for (const std::uint32_t i : as) {
    const double ai = a[i];
    for (const std::uint32_t j : bs) {
      const auto [sign, mask] = blade_product(i, j);
      out[mask] += sign * ai * b[j];
    }
  }
  return out;
}

Multivector reversion(const Multivector& a) {
  return apply_grade_signs(a, kReversionSign);
}

Multivector grade_involution(const Multivector& a) {
  return apply_grade_signs(a, kGradeSign);
}

Multivector conjugation(const Multivector& a) {
  return apply_grade_signs(a, kConjugationSign);
}

double eta(const Multivector& a, double tolerance) {
  const Multivector p = geometric_product(a, conjugation(a));
  const double s = p.scalar_part();
  const double scale = std::max(1.0, std::abs(s));
  for (int k = 1; k < p.ncoeffs(); ++k) {
    if (std::abs(p[static_cast<std::uint32_t>(k)]) > tolerance * scale) {
      throw NonScalarEta("eta has blade content " +
                         format_double(p[static_cast<std::uint32_t>(k)]) +
                         " at mask " + std::to_string(k));
    }
  }
  return s;
}

double modulus(const Multivector& a, double tolerance) {
  const double e = eta(a, tolerance);
  if (e < -tolerance) {
    throw NegativeEta("eta = " + format_double(e) + " has no real square root");
  }
  return std::sqrt(std::max(e, 0.0));
}

Multivector embed_vector(const Vec& v) {
  Multivector m(check_dim(static_cast<int>(v.size())));
  for (int i = 0; i < v.size(); ++i) {
    m[std::uint32_t{1} << i] = v[i];
  }
  return m;
}

Vec extract_vector(const Multivector& a, double tolerance) {
  Vec v(a.dim());
  double vmax = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    v[i] = a[std::uint32_t{1} << i];
    vmax = std::max(vmax, std::abs(v[i]));
  }
  const double scale = std::max(1.0, vmax);
  for (int k = 0; k < a.ncoeffs(); ++k) {
    if (std::popcount(static_cast<std::uint32_t>(k)) == 1) continue;
    if (std::abs(a[static_cast<std::uint32_t>(k)]) > tolerance * scale) {
      throw NotAVector("grade != 1 coefficient " +
                       format_double(a[static_cast<std::uint32_t>(k)]) +
                       " at mask " + std::to_string(k));
    }
  }
  return v;
}

Multivector one_minus_uv(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) {
    throw DimensionMismatch("vector dimensions differ: " +
                            std::to_string(u.size()) + " vs " +
                            std::to_string(v.size()));
  }
  Multivector m = -geometric_product(embed_vector(u), embed_vector(v));
  m[0] += 1.0;
  return m;
}

Multivector one_minus_uv_inverse(const Vec& u, const Vec& v) {
  const double nprod = u.norm() * v.norm();
  if (std::abs(1.0 - nprod) <= tol::sing) {
    throw SingularDenominator("|u||v| = " + format_double(nprod) +
                              " is on the unit product surface");
  }
  const Multivector m = one_minus_uv(u, v);
  const double e = eta(m);
  if (e < tol::sing * tol::sing) {
    throw SingularDenominator("eta(1 - uv) = " + format_double(e));
  }
  return one_minus_uv(v, u) / e;
}

Multivector clifford_inverse(const Multivector& g) {
  const double e = eta(g);
  if (std::abs(e) <= tol::sing * tol::sing) {
    throw SingularDenominator("eta(g) = " + format_double(e) +
                              " too small to invert");
  }
  return conjugation(g) / e;
}

bool clifford_group_membership(const Multivector& g, double grade_tolerance) {
  double e = 0.0;
  try {
    e = eta(g);
  } catch (const NonScalarEta&) {
    return false;
  }
  if (std::abs(e) <= tol::sing * tol::sing) return false;
  const Multivector twisted = grade_involution(g);
  const Multivector inv = conjugation(g) / e;
  for (int i = 0; i < g.dim(); ++i) {
    const Multivector ei = Multivector::basis_blade(g.dim(), std::uint32_t{1} << i);
    const Multivector image =
        geometric_product(geometric_product(twisted, ei), inv);
    try {
      extract_vector(image, grade_tolerance);
    } catch (const NotAVector&) {
      return false;
    }
  }
  return true;
}

Vec sandwich(const Multivector& q, const Vec& w) {
  const Multivector inv = clifford_inverse(q);
  const Multivector image =
      geometric_product(geometric_product(q, embed_vector(w)), inv);
  return extract_vector(image);
}

Rotor::Rotor(const Multivector& candidate)
    : mv_(candidate.dim()), inv_(candidate.dim()), eta_(0.0) {
  const double scale = std::max(1.0, candidate.max_abs());
  for (int k = 0; k < candidate.ncoeffs(); ++k) {
    const int g = std::popcount(static_cast<std::uint32_t>(k));
    if (g != 0 && g != 2 &&
        std::abs(candidate[static_cast<std::uint32_t>(k)]) >
            tol::grade * scale) {
      throw Error("rotor candidate has grade " + std::to_string(g) +
                  " content at mask " + std::to_string(k));
    }
  }
  const double m = modulus(candidate);
  if (m <= tol::sing) {
    throw SingularDenominator("rotor candidate has modulus " +
                              format_double(m));
  }
  mv_ = candidate / m;
  eta_ = eta(mv_);
  inv_ = conjugation(mv_) / eta_;
}

Vec Rotor::apply(const Vec& w) const {
  const Multivector image =
      geometric_product(geometric_product(mv_, embed_vector(w)), inv_);
  return extract_vector(image);
}

}  // namespace gyroball
