#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "projdio/bigint.hpp"
#include "projdio/geom.hpp"
#include "projdio/rng.hpp"

namespace projdio {

// Ball-measure provider on (a compact subset of) P^N(R) with a known
// Ahlfors regularity exponent and hyperplane-decay exponent. Instances are
// immutable after construction; all members are const and thread-safe.
class MeasureModel {
 public:
  enum class Kind { canonical, cantor_slope };

  virtual ~MeasureModel() = default;

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  double regularity_exponent() const { return regularity_; }
  double decay_exponent() const { return decay_; }
  const std::string& support_descriptor() const { return support_; }

  // Measure of the closed sine-metric ball B(x, r). Power-law guarantees
  // hold for r <= sin 1; r <= 1 is accepted generally.
  virtual double ball_measure(const ProjPoint& x, double r) const = 0;
  virtual bool support_contains(const ProjPoint& x) const = 0;
  // Draws a point of the support distributed by the measure.
  virtual ProjPoint sample(Rng& rng) const = 0;
  // Deterministic support-projected candidate sequence for ball packing.
  virtual std::vector<ProjPoint> packing_candidates(const ProjPoint& center,
                                                    double radius, int count,
                                                    std::uint64_t seed) const = 0;

 protected:
  MeasureModel(Kind kind, int dim, double regularity, double decay,
               std::string support)
      : kind_(kind), dim_(dim), regularity_(regularity), decay_(decay),
        support_(std::move(support)) {}

 private:
  Kind kind_;
  int dim_;
  double regularity_;
  double decay_;
  std::string support_;
};

// The canonical measure on P^N(R): normalized cone volume of the unit ball
// preimage. Ball measures are rotation invariant and evaluate to
// 2 (Gamma((N+1)/2) / (sqrt(pi) Gamma(N/2))) * integral_0^theta sin^{N-1},
// theta = arcsin r, by adaptive quadrature. N-Ahlfors regular.
class CanonicalMeasure final : public MeasureModel {
 public:
  explicit CanonicalMeasure(int dim);
  double ball_measure(const ProjPoint& x, double r) const override;
  bool support_contains(const ProjPoint& x) const override;
  ProjPoint sample(Rng& rng) const override;
  std::vector<ProjPoint> packing_candidates(const ProjPoint& center,
                                            double radius, int count,
                                            std::uint64_t seed) const override;
};

// Push-forward of the standard middle-thirds Cantor measure on slopes
// [0, 1] through the chart s -> phi(1, s). Regularity exponent log2/log3.
class CantorSlopeMeasure final : public MeasureModel {
 public:
  CantorSlopeMeasure();
  double ball_measure(const ProjPoint& x, double r) const override;
  bool support_contains(const ProjPoint& x) const override;
  ProjPoint sample(Rng& rng) const override;
  std::vector<ProjPoint> packing_candidates(const ProjPoint& center,
                                            double radius, int count,
                                            std::uint64_t seed) const override;

  // Distance from a slope to the Cantor set (0 for members).
  static double slope_distance_to_support(double s);
};

std::shared_ptr<const MeasureModel> make_measure(MeasureModel::Kind kind,
                                                 int dim);

// The paper's closed-form power-law pair for the canonical measure. Note
// these constants are stated for the unnormalized (total mass 2) cone
// formula; the normalized measure satisfies the law with (a/2, b/2).
std::pair<double, double> power_law_constants(int N);

struct PowerLawRow {
  int center_index;
  double r;
  double ratio;  // m(B(x, r)) / r^delta
};

struct PowerLawReport {
  std::vector<double> radii;
  std::vector<PowerLawRow> rows;
  double a_emp;  // min ratio
  double b_emp;  // max ratio
  bool has_paper_constants;
  double paper_a;
  double paper_b;
  // Window actually enforced: normalization-corrected paper window for the
  // canonical measure, fixed oscillation window for cantor_slope.
  double window_lo;
  double window_hi;
  bool violation;
};

PowerLawReport verify_power_law(const MeasureModel& model,
                                std::span<const double> radii,
                                std::span<const ProjPoint> centers);

struct McEstimate {
  double estimate;
  double std_error;
  std::int64_t hits;
  std::int64_t samples;
};

// Fraction of canonical-measure samples satisfying the predicate, with
// binomial standard error. Deterministic given the seed (per-sample seeds
// are derived from it, independent of thread count).
McEstimate monte_carlo_set_measure(const CanonicalMeasure& model,
                                   const std::function<bool(const ProjPoint&)>& predicate,
                                   std::int64_t samples, std::uint64_t seed,
                                   unsigned threads = 0);

// Estimated m(B(x,r) cap P^(eps)) / m(B(x,r)): Monte Carlo over the ball
// for the canonical measure, exact interval arithmetic for cantor_slope.
double decay_ratio(const MeasureModel& model, const ProjHyperplane& plane,
                   const ProjPoint& x, double r, double eps,
                   std::int64_t samples, std::uint64_t seed);

// Least-squares slope of log(ratio) against log(eps/r); the empirical
// decay exponent (reported, not asserted against the paper's eta = N).
double estimate_decay_exponent(const MeasureModel& model,
                               const ProjHyperplane& plane, const ProjPoint& x,
                               double r, std::span<const double> eps_grid,
                               std::int64_t samples, std::uint64_t seed);

// Uniform direction on S^N pushed through the quotient map; this is
// exactly a canonical-measure sample.
ProjPoint sample_canonical(int dim, Rng& rng);

// Devil's staircase (Cantor function). The exact version requires a
// rational in [0, 1] with moderate denominator (cycle detection); the
// double version is exact in the dyadic input and truncated at 2^-96.
BigRat cantor_cdf_exact(const BigRat& x);
double cantor_cdf(double x);
BigRat cantor_interval_mass_exact(const BigRat& lo, const BigRat& hi);
double cantor_interval_mass(double lo, double hi);

}  // namespace projdio
