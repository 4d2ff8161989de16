#pragma once

namespace projdio {

inline constexpr const char* kVersion = "0.1.0";

// All tolerances used by the library live here.
namespace tol {
// Representative normalization (unit norm, sign rule).
inline constexpr double kNormalization = 1e-12;
// ProjPoint equality threshold on the sine metric.
inline constexpr double kEquality = 1e-10;
// Above this |<x,y>| the sine metric switches from the Lagrange identity
// to the explicit minor expansion to avoid cancellation near delta = 0.
inline constexpr double kDeltaDotCrossover = 0.999;
// Absolute tolerance of the adaptive Simpson quadrature for cap measures.
inline constexpr double kQuadrature = 1e-10;
// Slack allowed when checking the simplex lemma in floating point.
inline constexpr double kSimplexSlack = 1e-12;
// Margins below this trigger the exact rational re-check of the lemma.
inline constexpr double kSimplexExactFallback = 1e-9;
}  // namespace tol

// Balls in P^N(R) are restricted to radius <= sin 1.
inline constexpr double kMaxBallRadius = 0.8414709848078965;  // sin(1)

// Combinatorial budget guards.
namespace guard {
inline constexpr int kSimplexMaxDim = 2;
inline constexpr int kSimplexMaxHeight = 12;
// badset certification bound t^depth by ambient dimension (N = 1, 2, ...).
inline constexpr double kBadsetMaxHeightN1 = 1e5;
inline constexpr double kBadsetMaxHeightN2 = 1e3;
// Largest vector count the eager enumeration helpers will materialize.
inline constexpr long long kEnumerateMaterializeLimit = 20'000'000;
}  // namespace guard

}  // namespace projdio
