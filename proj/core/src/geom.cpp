#include "projdio/geom.hpp"

#include <algorithm>
#include <cmath>

namespace projdio {

namespace {

// Flips the sign so the first coordinate with |v_i| > tol is positive.
void sign_normalize(Vec& v) {
  for (double c : v) {
    if (std::abs(c) > tol::kNormalization) {
      if (c < 0.0) {
        for (double& x : v) x = -x;
      }
      return;
    }
  }
}

}  // namespace

ProjPoint normalize_point(const Vec& v) {
  if (v.size() < 2) throw DimensionMismatch("point needs at least 2 coordinates");
  const double m = max_abs(v);
  if (!(m > 0.0) || !std::isfinite(m)) throw ZeroVector();
  // Pre-scale by the largest component before computing the norm; keeps the
  // pipeline stable for inputs of wildly different magnitude.
  Vec rep(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) rep[i] = v[i] / m;
  const double n = norm(rep);
  if (!(n > tol::kNormalization)) throw ZeroVector();
  for (double& c : rep) c /= n;
  sign_normalize(rep);
  return ProjPoint::from_canonical_rep(std::move(rep));
}

double wedge_norm(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatch();
  if (x.size() < 2) throw DimensionMismatch("wedge needs length >= 2");
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double m = x[i] * y[j] - x[j] * y[i];
      s += m * m;
    }
  }
  return std::sqrt(s);
}

double delta(const ProjPoint& x, const ProjPoint& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch();
  const double d = dot(x.rep(), y.rep());
  double result;
  if (std::abs(d) <= tol::kDeltaDotCrossover) {
    // Lagrange identity for unit vectors: |x ^ y|^2 = 1 - <x,y>^2.
    result = std::sqrt(std::max(0.0, 1.0 - d * d));
  } else {
    // Near-parallel representatives: 1 - d^2 cancels; the minors do not.
    result = wedge_norm(x.rep(), y.rep());
  }
  return std::min(result, 1.0);
}

bool ProjPoint::operator==(const ProjPoint& other) const {
  if (dim() != other.dim()) return false;
  return delta(*this, other) < tol::kEquality;
}

ProjHyperplane ProjHyperplane::from_normal(const Vec& normal) {
  ProjPoint p = normalize_point(normal);
  return ProjHyperplane(p.rep());
}

double dist_to_hyperplane(const ProjPoint& x, const ProjHyperplane& plane) {
  if (x.dim() != plane.dim()) throw DimensionMismatch();
  return std::min(std::abs(dot(x.rep(), plane.normal())), 1.0);
}

ProjBall::ProjBall(ProjPoint c, double r) : center(std::move(c)), radius(r) {
  if (!(r > 0.0) || r > kMaxBallRadius + 1e-15) throw RadiusOutOfRange();
}

ProjPoint slope_embed(double s) {
  if (!std::isfinite(s)) throw InvalidParameter("slope must be finite");
  return normalize_point({1.0, s});
}

std::optional<double> slope_extract(const ProjPoint& x) {
  if (x.dim() != 1) throw DimensionMismatch("slope chart is P^1 only");
  const double x0 = x.rep()[0];
  if (std::abs(x0) <= tol::kNormalization) return std::nullopt;
  return x.rep()[1] / x0;
}

}  // namespace projdio
