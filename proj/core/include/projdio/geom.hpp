#pragma once

#include <optional>

#include "projdio/constants.hpp"
#include "projdio/errors.hpp"
#include "projdio/vec.hpp"

namespace projdio {

// A point of P^N(R), stored as a canonical representative: a unit vector
// whose first coordinate of absolute value > tol::kNormalization is
// positive. All operations on ProjPoint are pure and thread-safe.
class ProjPoint {
 public:
  int dim() const { return static_cast<int>(rep_.size()) - 1; }
  const Vec& rep() const { return rep_; }

  // Equality is delta < tol::kEquality.
  bool operator==(const ProjPoint& other) const;
  bool operator!=(const ProjPoint& other) const { return !(*this == other); }

  // Internal: wraps an already-canonical representative.
  static ProjPoint from_canonical_rep(Vec rep) { return ProjPoint(std::move(rep)); }

 private:
  explicit ProjPoint(Vec rep) : rep_(std::move(rep)) {}
  Vec rep_;
};

// Quotient map composed with canonical normalization. Throws ZeroVector.
ProjPoint normalize_point(const Vec& v);

// Euclidean norm of the exterior product x wedge y (sqrt of the sum of
// squared 2x2 minors). Throws DimensionMismatch.
double wedge_norm(const Vec& x, const Vec& y);

// The sine metric on P^N(R): |x wedge y| / (|x| |y|). Result in [0, 1].
double delta(const ProjPoint& x, const ProjPoint& y);

// Codimension-1 projective subspace, stored by its unit normal vector
// (sign-normalized like ProjPoint representatives). For N = 1 the
// hyperplane is the single point orthogonal to the normal.
class ProjHyperplane {
 public:
  static ProjHyperplane from_normal(const Vec& normal);
  int dim() const { return static_cast<int>(normal_.size()) - 1; }
  const Vec& normal() const { return normal_; }

 private:
  explicit ProjHyperplane(Vec normal) : normal_(std::move(normal)) {}
  Vec normal_;
};

// inf over the hyperplane of the sine metric; closed form |<rep(x), normal>|.
double dist_to_hyperplane(const ProjPoint& x, const ProjHyperplane& plane);

// Closed metric ball in P^N(R); radius restricted to (0, sin 1].
struct ProjBall {
  ProjBall(ProjPoint c, double r);
  ProjPoint center;
  double radius;
};

// Slope chart on P^1: s -> phi(1, s). slope_extract returns nullopt for the
// vertical line phi(0, 1).
ProjPoint slope_embed(double s);
std::optional<double> slope_extract(const ProjPoint& x);

}  // namespace projdio
