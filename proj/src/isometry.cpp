#include "gyroball/isometry.hpp"

#include <string>
#include <vector>

namespace gyroball {

namespace {

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + " dimensions differ: " +
                            std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

BallVector apply(const OrthogonalMap& tau, const BallVector& x) {
  return BallVector::result(tau.apply(x.coords()), x.complement());
}

Isometry::Isometry(BallVector translation, OrthogonalMap rotation)
    : translation_(std::move(translation)), rotation_(std::move(rotation)) {
  require_same_dim(translation_.dim(), rotation_.dim(), "isometry part");
}

Isometry Isometry::identity(int dim) {
  return Isometry(BallVector::zero(dim), OrthogonalMap::identity(dim));
}

BallVector Isometry::apply(const BallVector& x) const {
  return mobius_add_direct(translation_, gyroball::apply(rotation_, x));
}

std::pair<BallVector, OrthogonalMap> gyrosemidirect_product(
    const BallVector& u, const OrthogonalMap& alpha, const BallVector& v,
    const OrthogonalMap& beta) {
  require_same_dim(u.dim(), alpha.dim(), "pair");
  require_same_dim(v.dim(), beta.dim(), "pair");
  require_same_dim(u.dim(), v.dim(), "operand");
  const BallVector av = apply(alpha, v);
  BallVector trans = mobius_add_direct(u, av);
  OrthogonalMap rot = gyration_matrix({u, av}) * alpha * beta;
  return {std::move(trans), std::move(rot)};
}

std::pair<BallVector, OrthogonalMap> gyrosemidirect_identity(int dim) {
  return {BallVector::zero(dim), OrthogonalMap::identity(dim)};
}

std::pair<BallVector, OrthogonalMap> gyrosemidirect_inverse(
    const BallVector& u, const OrthogonalMap& alpha) {
  require_same_dim(u.dim(), alpha.dim(), "pair");
  OrthogonalMap ai = alpha.inverse();
  BallVector ui = BallVector::result(-(ai.matrix() * u.coords()),
                                     u.complement());
  return {std::move(ui), std::move(ai)};
}

Isometry compose(const Isometry& s, const Isometry& t) {
  require_same_dim(s.dim(), t.dim(), "isometry");
  auto [u, tau] = gyrosemidirect_product(s.translation(), s.rotation(),
                                         t.translation(), t.rotation());
  return Isometry(std::move(u), std::move(tau));
}

Isometry inverse(const Isometry& t) {
  auto [u, tau] = gyrosemidirect_inverse(t.translation(), t.rotation());
  return Isometry(std::move(u), std::move(tau));
}

Isometry symmetry_at(const BallVector& x) {
  const int n = x.dim();
  const Isometry left(x, OrthogonalMap::identity(n));
  const Isometry point_reflection(BallVector::zero(n),
                                  OrthogonalMap::inversion(n));
  const Isometry right(x.negated(), OrthogonalMap::identity(n));
  return compose(compose(left, point_reflection), right);
}

Isometry transport(const BallVector& x, const BallVector& y) {
  require_same_dim(x.dim(), y.dim(), "ball vector");
  const int n = x.dim();
  return compose(Isometry(y, OrthogonalMap::identity(n)),
                 Isometry(x.negated(), OrthogonalMap::identity(n)));
}

bool isometry_equal(const Isometry& a, const Isometry& b, double tolerance) {
  if (a.dim() != b.dim()) return false;
  const double du =
      (a.translation().coords() - b.translation().coords()).norm();
  const double dm =
      (a.rotation().matrix() - b.rotation().matrix()).cwiseAbs().maxCoeff();
  return du <= tolerance && dm <= tolerance;
}

nlohmann::ordered_json isometry_to_json(const Isometry& t) {
  nlohmann::ordered_json j;
  j["dim"] = t.dim();
  j["u"] = std::vector<double>(t.translation().coords().begin(),
                               t.translation().coords().end());
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  const Mat& m = t.rotation().matrix();
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<double> row(m.cols());
    for (int c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    rows.push_back(row);
  }
  j["tau"] = std::move(rows);
  return j;
}

Isometry isometry_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("u") ||
      !j.contains("tau")) {
    throw Error("isometry JSON must carry dim, u and tau fields");
  }
  if (!j["dim"].is_number_integer()) {
    throw Error("isometry JSON field dim must be an integer");
  }
  const int n = j["dim"].get<int>();
  if (n < 1) throw Error("isometry JSON dim must be >= 1");
  if (!j["u"].is_array() || j["u"].size() != static_cast<std::size_t>(n)) {
    throw Error("isometry JSON field u must be an array of length dim");
  }
  Vec u(n);
  for (int i = 0; i < n; ++i) {
    if (!j["u"][i].is_number()) throw Error("isometry JSON u entries must be numbers");
    u[i] = j["u"][i].get<double>();
  }
  if (!j["tau"].is_array() || j["tau"].size() != static_cast<std::size_t>(n)) {
    throw Error("isometry JSON field tau must be a dim x dim row-major matrix");
  }
  Mat m(n, n);
  for (int r = 0; r < n; ++r) {
    const auto& row = j["tau"][r];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw Error("isometry JSON field tau must be a dim x dim row-major matrix");
    }
    for (int c = 0; c < n; ++c) {
      if (!row[c].is_number()) throw Error("isometry JSON tau entries must be numbers");
      m(r, c) = row[c].get<double>();
    }
  }
  return Isometry(BallVector(std::move(u)), OrthogonalMap(std::move(m)));
}

}  // namespace gyroball
