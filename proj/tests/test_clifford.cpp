#include <cmath>
#include <cstdint>

#include <doctest.h>

#include "gyroball/clifford.hpp"
#include "gyroball/errors.hpp"
#include "gyroball/rng.hpp"
#include "gyroball/tolerances.hpp"
#include "support/naive_clifford.hpp"

using gyroball::Multivector;
using gyroball::Vec;

namespace {

Vec make_vec(std::initializer_list<double> vals) {
  Vec v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (const double x : vals) v[i++] = x;
  return v;
}

Multivector random_mv(gyroball::SampleRng& rng, int dim, int terms) {
  Multivector m(dim);
  const std::uint64_t limit = (std::uint64_t{1} << dim) - 1;
  for (int t = 0; t < terms; ++t) {
    m[static_cast<std::uint32_t>(rng.next() & limit)] += rng.uniform(-1.0, 1.0);
  }
  return m;
}

}  // namespace

TEST_CASE("blade product matches the symbol-reordering oracle exhaustively") {
  for (int dim = 1; dim <= 6; ++dim) {
    const std::uint32_t n = std::uint32_t{1} << dim;
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        const auto got = gyroball::blade_product(a, b);
        const auto want = naive::blade_product(a, b);
        REQUIRE(got.first == want.first);
        REQUIRE(got.second == want.second);
      }
    }
  }
}

TEST_CASE("geometric product agrees bitwise with the dense oracle") {
  for (const int dim : {2, 3, 5, 7}) {
    for (int s = 0; s < 20; ++s) {
      gyroball::SampleRng rng(9001, "test_gp", dim, static_cast<std::uint64_t>(s));
      const Multivector a = random_mv(rng, dim, 6);
      const Multivector b = random_mv(rng, dim, 6);
      const Multivector got = a * b;
      const auto want = naive::multiply(dim, a.coeffs(), b.coeffs());
      for (int k = 0; k < got.ncoeffs(); ++k) {
        REQUIRE(got[static_cast<std::uint32_t>(k)] ==
                want[static_cast<std::size_t>(k)]);
      }
    }
  }
}

TEST_CASE("generator relations") {
  const int dim = 4;
  for (int i = 0; i < dim; ++i) {
    const Multivector ei = Multivector::basis_blade(dim, 1u << i);
    const Multivector sq = ei * ei;
    CHECK(sq.scalar_part() == -1.0);
    CHECK(sq.max_abs() == 1.0);
    for (int j = i + 1; j < dim; ++j) {
      const Multivector ej = Multivector::basis_blade(dim, 1u << j);
      const Multivector anti = ei * ej + ej * ei;
      CHECK(anti.max_abs() == 0.0);
    }
  }
  // Grade-3 pseudoscalar of Cl(0,3) squares to +1.
  const Multivector e123 = Multivector::basis_blade(3, 0b111);
  CHECK((e123 * e123).scalar_part() == 1.0);
}

TEST_CASE("involutions act by grade and compose correctly") {
  const Multivector e1 = Multivector::basis_blade(3, 0b001);
  const Multivector e12 = Multivector::basis_blade(3, 0b011);
  const Multivector e123 = Multivector::basis_blade(3, 0b111);

  CHECK(gyroball::reversion(e1)[0b001] == 1.0);
  CHECK(gyroball::reversion(e12)[0b011] == -1.0);
  CHECK(gyroball::reversion(e123)[0b111] == -1.0);

  CHECK(gyroball::grade_involution(e1)[0b001] == -1.0);
  CHECK(gyroball::grade_involution(e12)[0b011] == 1.0);
  CHECK(gyroball::grade_involution(e123)[0b111] == -1.0);

  CHECK(gyroball::conjugation(e1)[0b001] == -1.0);
  CHECK(gyroball::conjugation(e12)[0b011] == -1.0);
  CHECK(gyroball::conjugation(e123)[0b111] == 1.0);

  for (const int dim : {2, 4, 6}) {
    gyroball::SampleRng rng(77, "test_inv", dim, 0);
    const Multivector m = random_mv(rng, dim, 10);
    const Multivector composed =
        gyroball::conjugation(m) -
        gyroball::reversion(gyroball::grade_involution(m));
    CHECK(composed.max_abs() == 0.0);
    CHECK((gyroball::reversion(gyroball::reversion(m)) - m).max_abs() == 0.0);
  }
}

TEST_CASE("one_minus_uv fixture and eta") {
  const Multivector m =
      gyroball::one_minus_uv(make_vec({0.5, 0.0}), make_vec({0.0, 0.5}));
  CHECK(m[0b00] == 1.0);
  CHECK(m[0b01] == 0.0);
  CHECK(m[0b10] == 0.0);
  CHECK(m[0b11] == -0.25);
  // (1 - 0.25 e12)(1 + 0.25 e12) = 1 + 1/16, exact in binary arithmetic.
  CHECK(gyroball::eta(m) == 1.0625);
  CHECK(gyroball::modulus(m) == std::sqrt(1.0625));
  CHECK(m.to_string() == "1 - 0.25*e12");
  CHECK(Multivector(3).to_string() == "0");
}

TEST_CASE("eta of a vector is its squared norm") {
  for (const int dim : {2, 3, 5, 8}) {
    gyroball::SampleRng rng(5, "test_eta", dim, 0);
    for (int s = 0; s < 50; ++s) {
      const Vec v = rng.ball_point(dim, 0.95).coords();
      CHECK(gyroball::eta(gyroball::embed_vector(v)) ==
            doctest::Approx(v.squaredNorm()).epsilon(1e-14));
    }
  }
}

TEST_CASE("eta rejects arguments with non-scalar self-product") {
  Multivector m = Multivector::scalar(3, 1.0);
  m[0b111] += 1.0;  // 1 + e123: (1 + e123) conj(1 + e123) = 2 + 2 e123
  CHECK_THROWS_AS((void)gyroball::eta(m), gyroball::NonScalarEta);

  Multivector mixed(3);
  mixed[0b001] = 1.0;
  mixed[0b110] = 1.0;  // e1 + e23
  CHECK_THROWS_AS((void)gyroball::eta(mixed), gyroball::NonScalarEta);
}

TEST_CASE("embed and extract round-trip; extract rejects non-vectors") {
  for (const int dim : {1, 2, 5, 12}) {
    gyroball::SampleRng rng(11, "test_embed", dim, 0);
    const Vec v = rng.ball_point(dim, 0.9).coords();
    const Vec back = gyroball::extract_vector(gyroball::embed_vector(v));
    for (int i = 0; i < dim; ++i) CHECK(back[i] == v[i]);
  }
  Multivector m = Multivector::scalar(2, 1.0);
  m[0b01] = 0.5;
  CHECK_THROWS_AS((void)gyroball::extract_vector(m), gyroball::NotAVector);
  CHECK_THROWS_AS(
      (void)gyroball::extract_vector(Multivector::basis_blade(2, 0b11)),
      gyroball::NotAVector);
}

TEST_CASE("one_minus_uv_inverse inverts and honors both singularity guards") {
  for (const int dim : {2, 3, 6}) {
    gyroball::SampleRng rng(23, "test_inv2", dim, 0);
    for (int s = 0; s < 30; ++s) {
      const Vec u = rng.ball_point(dim, 0.95).coords();
      const Vec v = rng.ball_point(dim, 0.95).coords();
      const Multivector prod =
          gyroball::one_minus_uv(u, v) * gyroball::one_minus_uv_inverse(u, v);
      Multivector expect = Multivector::scalar(dim, 1.0);
      CHECK((prod - expect).max_abs() < 1e-14);
    }
  }
  // ||u|| ||v|| = 1 with parallel directions: the precondition fails even
  // though the quadratic form is far from zero.
  CHECK_THROWS_AS((void)gyroball::one_minus_uv_inverse(
                      make_vec({0.9, 0.0}), make_vec({1.0 / 0.9, 0.0})),
                  gyroball::SingularDenominator);
  // Antiparallel unit-product pair drives the quadratic form itself to zero.
  CHECK_THROWS_AS((void)gyroball::one_minus_uv_inverse(
                      make_vec({0.6, 0.0}), make_vec({-1.0 / 0.6, 0.0})),
                  gyroball::SingularDenominator);
}

TEST_CASE("clifford_inverse inverts group elements") {
  for (const int dim : {2, 4, 7}) {
    gyroball::SampleRng rng(31, "test_cinv", dim, 0);
    const Vec a = rng.sphere_direction(dim) * 0.8;
    const Vec b = rng.sphere_direction(dim) * 1.7;
    const Multivector g =
        gyroball::embed_vector(a) * gyroball::embed_vector(b);
    const Multivector prod = g * gyroball::clifford_inverse(g);
    Multivector expect = Multivector::scalar(dim, 1.0);
    CHECK((prod - expect).max_abs() < 1e-14);
  }
}

TEST_CASE("group membership accepts versors and rejects junk") {
  gyroball::SampleRng rng(41, "test_member", 3, 0);
  const Vec a = rng.sphere_direction(3) * 0.5;
  const Vec b = rng.sphere_direction(3) * 1.2;
  CHECK(gyroball::clifford_group_membership(gyroball::embed_vector(a)));
  CHECK(gyroball::clifford_group_membership(gyroball::embed_vector(a) *
                                            gyroball::embed_vector(b)));
  CHECK(gyroball::clifford_group_membership(
      gyroball::one_minus_uv(make_vec({0.3, 0.1, 0.0}),
                             make_vec({-0.2, 0.4, 0.5}))));

  Multivector bad = Multivector::scalar(3, 1.0);
  bad[0b001] = 1.0;  // 1 + e1
  CHECK_FALSE(gyroball::clifford_group_membership(bad));
  CHECK_FALSE(gyroball::clifford_group_membership(Multivector(3)));
}

TEST_CASE("sandwich fixture: q = 1 - 0.25 e12 rotates by the 15/17 matrix") {
  const Multivector q =
      gyroball::one_minus_uv(make_vec({0.5, 0.0}), make_vec({0.0, 0.5}));
  const Vec r1 = gyroball::sandwich(q, make_vec({1.0, 0.0}));
  const Vec r2 = gyroball::sandwich(q, make_vec({0.0, 1.0}));
  CHECK(std::abs(r1[0] - 15.0 / 17.0) < 1e-15);
  CHECK(std::abs(r1[1] + 8.0 / 17.0) < 1e-15);
  CHECK(std::abs(r2[0] - 8.0 / 17.0) < 1e-15);
  CHECK(std::abs(r2[1] - 15.0 / 17.0) < 1e-15);
}

TEST_CASE("rotor normalizes, validates grade support, and rejects zero") {
  const Multivector q =
      gyroball::one_minus_uv(make_vec({0.5, 0.0}), make_vec({0.0, 0.5}));
  const gyroball::Rotor r(q);
  CHECK(std::abs(r.eta_value() - 1.0) < 1e-15);
  CHECK(std::abs(gyroball::modulus(r.mv()) - 1.0) < 1e-15);

  const Vec w = make_vec({0.2, -0.7});
  const Vec rw = r.apply(w);
  CHECK(std::abs(rw.norm() - w.norm()) < 1e-15);

  CHECK_THROWS_AS(gyroball::Rotor(gyroball::embed_vector(make_vec({1.0, 0.0}))),
                  gyroball::Error);
  CHECK_THROWS_AS(gyroball::Rotor(Multivector(2)),
                  gyroball::SingularDenominator);
}

TEST_CASE("dimension guards") {
  CHECK_THROWS_AS(Multivector(0), gyroball::Error);
  CHECK_THROWS_AS(Multivector(gyroball::dim_max + 1), gyroball::Error);
  const Multivector a(2);
  const Multivector b(3);
  CHECK_THROWS_AS((void)(a * b), gyroball::DimensionMismatch);
  CHECK_THROWS_AS((void)(Multivector(2) + Multivector(3)),
                  gyroball::DimensionMismatch);
}
