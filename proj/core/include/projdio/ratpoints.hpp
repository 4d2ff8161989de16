#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "projdio/bigint.hpp"
#include "projdio/geom.hpp"

namespace projdio {

// A point of P^N(Q): primitive (gcd 1) integer homogeneous coordinates with
// the first nonzero coordinate positive. height = max |coords_i|.
struct ProjRational {
  std::vector<BigInt> coords;
  BigInt height;

  int dim() const { return static_cast<int>(coords.size()) - 1; }
  ProjPoint to_point() const;
  // Euclidean norm of the primitive coordinate vector; the normalization
  // height used by the approximation constants (see approx.hpp).
  double euclidean_height() const;

  bool operator==(const ProjRational& other) const {
    return coords == other.coords;
  }
  // Deterministic order: height first, then lexicographic on coords.
  bool operator<(const ProjRational& other) const;
};

ProjRational make_rational(std::vector<BigInt> v);
ProjRational make_rational(std::span<const std::int64_t> v);

// Visits every ProjRational with height <= bound exactly once, in
// nondecreasing height order, lexicographic on coords within a height.
// The callback returns false to stop early.
void enumerate_up_to(int dim, const BigInt& bound,
                     const std::function<bool(const ProjRational&)>& yield);
std::vector<ProjRational> enumerate_up_to(int dim, const BigInt& bound);

// All ProjRational with lo <= height < hi (requires 1 <= lo < hi).
void enumerate_band(int dim, const BigInt& lo, const BigInt& hi,
                    const std::function<bool(const ProjRational&)>& yield);
std::vector<ProjRational> enumerate_band(int dim, const BigInt& lo,
                                         const BigInt& hi);

// Exactly the band members q with delta(center, phi(q)) <= ball.radius,
// sorted by (height, lex). Uses a provably complete coordinate-window scan
// when the radius is small enough for the window bound to apply, otherwise
// falls back to filtering the full band.
std::vector<ProjRational> rationals_in_ball(const ProjBall& ball,
                                            const BigInt& lo, const BigInt& hi);

namespace detail {
// Hot-path enumeration over primitive canonical vectors with height in
// [h_lo, h_hi), visiting raw int64 coordinates. Heights must fit in int64.
void for_each_primitive(int dim, std::int64_t h_lo, std::int64_t h_hi,
                        const std::function<bool(std::span<const std::int64_t>)>& yield);
std::int64_t to_i64_checked(const BigInt& v);
}  // namespace detail

}  // namespace projdio
