#pragma once

#include <utility>

#include <nlohmann/json.hpp>

#include "gyroball/gyro.hpp"
#include "gyroball/orthogonal.hpp"
#include "gyroball/types.hpp"

namespace gyroball {

/// Applies an orthogonal map to a ball point; the complement carries over
/// since the norm is preserved.
BallVector apply(const OrthogonalMap& tau, const BallVector& x);

/// Isometry of the ball in canonical form x |-> u (+) tau(x).
///
/// The pair (u, tau) is unique for each isometry, so equality and inversion
/// work directly on the stored parts.
class Isometry {
 public:
  Isometry(BallVector translation, OrthogonalMap rotation);

  static Isometry identity(int dim);

  int dim() const { return translation_.dim(); }
  const BallVector& translation() const { return translation_; }
  const OrthogonalMap& rotation() const { return rotation_; }

  BallVector apply(const BallVector& x) const;

 private:
  BallVector translation_;
  OrthogonalMap rotation_;
};

/// Composition s after t, computed by the gyrosemidirect product law.
Isometry compose(const Isometry& s, const Isometry& t);

/// Group inverse (-tau^T u, tau^T).
Isometry inverse(const Isometry& t);

/// Point symmetry about x, the composition L_x . (-I) . L_{-x}.
Isometry symmetry_at(const BallVector& x);

/// The canonical isometry taking x to y, L_y . L_{-x}.
Isometry transport(const BallVector& x, const BallVector& y);

/// Componentwise comparison of the canonical pairs.
bool isometry_equal(const Isometry& a, const Isometry& b,
                    double tolerance = tol::eq);

/// Group law on raw pairs: ((u, alpha), (v, beta)) |->
/// (u (+) alpha v, Gyr[u, alpha v] alpha beta).
std::pair<BallVector, OrthogonalMap> gyrosemidirect_product(
    const BallVector& u, const OrthogonalMap& alpha, const BallVector& v,
    const OrthogonalMap& beta);

std::pair<BallVector, OrthogonalMap> gyrosemidirect_identity(int dim);

std::pair<BallVector, OrthogonalMap> gyrosemidirect_inverse(
    const BallVector& u, const OrthogonalMap& alpha);

/// Serializes as {"dim": n, "u": [...], "tau": [[...], ...]} with tau in
/// row-major order.
nlohmann::ordered_json isometry_to_json(const Isometry& t);

/// Parses and validates the schema above. Throws Error on malformed input,
/// OutsideBall / NotOrthogonal when the parts fail validation.
Isometry isometry_from_json(const nlohmann::json& j);

}  // namespace gyroball
