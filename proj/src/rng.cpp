#include "gyroball/rng.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace gyroball {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

// SplitMix64 finalizer.
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::string_view suite, int dim,
                     std::uint64_t sample) {
  std::uint64_t s = mix(seed ^ fnv1a(suite));
  s = mix(s ^ (kGamma * static_cast<std::uint64_t>(dim + 1)));
  state_ = mix(s ^ sample);
}

std::uint64_t SampleRng::next() {
  state_ += kGamma;
  return mix(state_);
}

double SampleRng::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SampleRng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double SampleRng::normal() {
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Vec SampleRng::sphere_direction(int n) {
  for (;;) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    const double len = v.norm();
    if (len > 1e-8) return v / len;
  }
}

BallVector SampleRng::ball_point(int n, double r_max) {
  const Vec dir = sphere_direction(n);
  const double r = r_max * std::pow(uniform01(), 1.0 / n);
  // (1 - r)(1 + r) keeps the complement accurate when r_max hugs the
  // boundary.
  return BallVector::result(r * dir, (1.0 - r) * (1.0 + r));
}

Mat SampleRng::orthogonal_matrix(int n) {
  Mat g(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) g(r, c) = normal();
  }
  const Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  if (next() & 1u) q.col(0) = -q.col(0);
  return q;
}

}  // namespace gyroball
