#include "projdio/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "projdio/constants.hpp"
#include "projdio/parallel.hpp"
#include "projdio/quadrature.hpp"

namespace projdio {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const double kLog2Log3 = std::log(2.0) / std::log(3.0);

double cap_coefficient(int N) {
  return 2.0 * std::tgamma((N + 1) / 2.0) /
         (std::sqrt(kPi) * std::tgamma(N / 2.0));
}

void check_radius_general(double r) {
  if (!(r > 0.0) || r > 1.0) throw RadiusOutOfRange();
}

// Unit tangent vector at `c` drawn from the rotation-invariant distribution.
Vec random_tangent(const Vec& c, Rng& rng) {
  const int len = static_cast<int>(c.size());
  Vec u(len);
  while (true) {
    for (auto& v : u) v = rng.gaussian();
    const double un = dot(u, c);
    for (int i = 0; i < len; ++i) u[i] -= un * c[i];
    const double n = norm(u);
    if (n > 1e-9) {
      for (auto& v : u) v /= n;
      return u;
    }
  }
}

// Uniform sample (w.r.t. the canonical measure restricted to the ball) of
// the closed ball B(center, r): polar angle z in [0, arcsin r] with density
// proportional to sin^{N-1} z, azimuth uniform on the tangent sphere.
ProjPoint sample_in_ball(const ProjPoint& center, double r, Rng& rng) {
  const int N = center.dim();
  const double nu = std::asin(std::min(r, 1.0));
  double z;
  if (N == 1) {
    z = nu * rng.uniform01();
  } else {
    const double m = std::pow(std::sin(nu), N - 1);
    do {
      z = nu * rng.uniform01();
    } while (rng.uniform01() * m > std::pow(std::sin(z), N - 1));
  }
  const Vec& c = center.rep();
  const Vec t = random_tangent(c, rng);
  Vec v(c.size());
  const double cz = std::cos(z), sz = std::sin(z);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = cz * c[i] + sz * t[i];
  return normalize_point(v);
}

// Slope interval cut out of the chart s -> phi(1, s), s in [0, 1], by the
// sine-metric ball B(x, r). Angles wrap past the vertical line only into
// negative slopes, which the [0, 1] support never meets.
std::pair<double, double> ball_slope_interval(const ProjPoint& x, double r) {
  const double tx = std::atan2(x.rep()[1], x.rep()[0]);
  const double th = std::asin(std::min(r, 1.0));
  const double half_pi = kPi / 2.0;
  const double lo_angle = tx - th;
  const double hi_angle = tx + th;
  double lo = (lo_angle <= -half_pi) ? 0.0 : std::tan(lo_angle);
  double hi = (hi_angle >= half_pi) ? 1.0 : std::tan(hi_angle);
  lo = std::clamp(lo, 0.0, 1.0);
  hi = std::clamp(hi, 0.0, 1.0);
  if (hi < lo) hi = lo;
  return {lo, hi};
}

// Exact ternary-digit walk of the Cantor function on p/q in [0, 1],
// emitting binary digits; terminates at the first ternary digit 1 (the
// value is then a finite dyadic) or when the remainder hits zero.
struct CdfWalk {
  BigRat value;  // accumulated binary prefix
  BigRat scale;  // 2^-k
  BigInt p, q;   // remaining state p/q
  bool terminated = false;

  explicit CdfWalk(const BigRat& x)
      : value(0), scale(1), p(numerator(x)), q(denominator(x)) {}

  void step() {
    const BigInt t = 3 * p;
    BigInt d = t / q;
    if (d > 2) d = 2;
    p = t - d * q;
    scale /= 2;
    if (d == 1) {
      // A digit 1 puts x inside or past a removed gap: the CDF value is the
      // binary prefix closed with a 1; the ternary tail contributes nothing.
      value += scale;
      terminated = true;
      return;
    }
    if (d == 2) value += scale;
    if (p == 0) terminated = true;
  }
};

}  // namespace

BigRat cantor_cdf_exact(const BigRat& x) {
  if (x <= 0) return BigRat(0);
  if (x >= 1) return BigRat(1);
  if (denominator(x) > BigInt(1000000000)) {
    throw InvalidParameter("cantor_cdf_exact needs a moderate denominator");
  }
  CdfWalk w(x);
  // States are p/q with 0 <= p < q, so a cycle appears within q steps.
  std::map<BigInt, std::pair<BigRat, BigRat>> seen;  // p -> (value, scale)
  while (!w.terminated) {
    auto it = seen.find(w.p);
    if (it != seen.end()) {
      // Periodic tail: geometric series at the entry scale.
      const BigRat v0 = it->second.first;
      const BigRat s0 = it->second.second;
      const BigRat c = (w.value - v0) / s0;
      const BigRat ratio = w.scale / s0;  // 2^-L over the cycle
      return v0 + s0 * c / (1 - ratio);
    }
    seen.emplace(w.p, std::make_pair(w.value, w.scale));
    w.step();
  }
  return w.value;
}

double cantor_cdf(double x) {
  if (!(x > 0.0)) return 0.0;
  if (x >= 1.0) return 1.0;
  CdfWalk w{BigRat(x)};
  for (int k = 0; k < 96 && !w.terminated; ++k) w.step();
  return to_double(w.value);
}

BigRat cantor_interval_mass_exact(const BigRat& lo, const BigRat& hi) {
  if (hi <= lo) return BigRat(0);
  return cantor_cdf_exact(hi) - cantor_cdf_exact(lo);
}

double cantor_interval_mass(double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  return cantor_cdf(hi) - cantor_cdf(lo);
}

ProjPoint sample_canonical(int dim, Rng& rng) {
  Vec v(dim + 1);
  double n = 0.0;
  do {
    for (auto& c : v) c = rng.gaussian();
    n = norm(v);
  } while (n < 1e-6);
  return normalize_point(v);
}

// ---------------------------------------------------------------------------
// CanonicalMeasure

CanonicalMeasure::CanonicalMeasure(int dim)
    : MeasureModel(Kind::canonical, dim, static_cast<double>(dim),
                   static_cast<double>(dim),
                   "P^" + std::to_string(dim) + "(R)") {
  if (dim < 1) throw InvalidParameter("dim must be >= 1");
}

double CanonicalMeasure::ball_measure(const ProjPoint& x, double r) const {
  if (x.dim() != dim()) throw DimensionMismatch();
  check_radius_general(r);
  const double theta = std::asin(r);
  const int N = dim();
  const double integral = adaptive_simpson(
      [N](double z) { return std::pow(std::sin(z), N - 1); }, 0.0, theta,
      tol::kQuadrature);
  return std::min(1.0, cap_coefficient(N) * integral);
}

bool CanonicalMeasure::support_contains(const ProjPoint& x) const {
  return x.dim() == dim();
}

ProjPoint CanonicalMeasure::sample(Rng& rng) const {
  return sample_canonical(dim(), rng);
}

std::vector<ProjPoint> CanonicalMeasure::packing_candidates(
    const ProjPoint& center, double radius, int count,
    std::uint64_t seed) const {
  if (center.dim() != dim()) throw DimensionMismatch();
  std::vector<ProjPoint> out;
  out.reserve(count);
  const double nu = std::asin(std::min(radius, 1.0));
  if (dim() == 1) {
    // Deterministic low-discrepancy sweep of the arc.
    const double t0 = std::atan2(center.rep()[1], center.rep()[0]);
    const double shift = static_cast<double>(seed % 4096) / 4096.0;
    for (int i = 0; i < count; ++i) {
      double u = van_der_corput(i + 1) + shift;
      u -= std::floor(u);
      const double t = t0 + (2.0 * u - 1.0) * nu;
      out.push_back(normalize_point({std::cos(t), std::sin(t)}));
    }
    return out;
  }
  for (int i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const double u = van_der_corput(i + 1);
    const double z = nu * std::pow(u, 1.0 / dim());
    const Vec t = random_tangent(center.rep(), rng);
    Vec v(center.rep().size());
    for (std::size_t j = 0; j < v.size(); ++j) {
      v[j] = std::cos(z) * center.rep()[j] + std::sin(z) * t[j];
    }
    out.push_back(normalize_point(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// CantorSlopeMeasure

CantorSlopeMeasure::CantorSlopeMeasure()
    : MeasureModel(Kind::cantor_slope, 1, kLog2Log3, kLog2Log3,
                   "middle-thirds Cantor slopes in [0,1] via phi(1,s)") {}

double CantorSlopeMeasure::slope_distance_to_support(double s) {
  if (s < 0.0) return -s;
  if (s > 1.0) return s - 1.0;
  double scale = 1.0;
  for (int depth = 0; depth < 64; ++depth) {
    if (s > 1.0 / 3.0 && s < 2.0 / 3.0) {
      return scale * std::min(s - 1.0 / 3.0, 2.0 / 3.0 - s);
    }
    if (s <= 1.0 / 3.0) {
      s *= 3.0;
    } else {
      s = 3.0 * s - 2.0;
    }
    s = std::clamp(s, 0.0, 1.0);
    scale /= 3.0;
    if (scale < 1e-18) break;
  }
  return 0.0;
}

bool CantorSlopeMeasure::support_contains(const ProjPoint& x) const {
  if (x.dim() != 1) return false;
  const auto s = slope_extract(x);
  if (!s) return false;
  return slope_distance_to_support(*s) <= 1e-9;
}

double CantorSlopeMeasure::ball_measure(const ProjPoint& x, double r) const {
  if (x.dim() != 1) throw DimensionMismatch();
  check_radius_general(r);
  if (!support_contains(x)) throw PointOutsideSupport();
  const auto [lo, hi] = ball_slope_interval(x, r);
  return cantor_interval_mass(lo, hi);
}

ProjPoint CantorSlopeMeasure::sample(Rng& rng) const {
  // Random binary digits become ternary digits in {0, 2}.
  double s = 0.0;
  double scale = 1.0;
  std::uint64_t bits = rng.next_u64();
  for (int k = 0; k < 53; ++k) {
    scale /= 3.0;
    if (k == 48) bits = rng.next_u64();
    if (bits & 1) s += 2.0 * scale;
    bits >>= 1;
  }
  return slope_embed(s);
}

std::vector<ProjPoint> CantorSlopeMeasure::packing_candidates(
    const ProjPoint& center, double radius, int count,
    std::uint64_t seed) const {
  (void)seed;
  const auto [lo, hi] = ball_slope_interval(center, radius);
  // Descend the triadic construction intervals that survive inside
  // [lo, hi]; surviving left endpoints are Cantor points.
  std::vector<ProjPoint> out;
  std::vector<std::pair<double, double>> frontier{{0.0, 1.0}};
  const double target =
      std::max((hi - lo) / (4.0 * std::max(count, 1)), 1e-15);
  while (!frontier.empty() &&
         frontier.front().second - frontier.front().first > target &&
         static_cast<int>(frontier.size()) < 4 * count) {
    std::vector<std::pair<double, double>> next;
    for (const auto& [a, b] : frontier) {
      const double w = (b - a) / 3.0;
      for (const auto& piece :
           {std::make_pair(a, a + w), std::make_pair(b - w, b)}) {
        if (piece.second >= lo && piece.first <= hi) next.push_back(piece);
      }
    }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  for (const auto& [a, b] : frontier) {
    (void)b;
    if (a >= lo && a <= hi) out.push_back(slope_embed(a));
    if (static_cast<int>(out.size()) >= count) break;
  }
  return out;
}

std::shared_ptr<const MeasureModel> make_measure(MeasureModel::Kind kind,
                                                 int dim) {
  if (kind == MeasureModel::Kind::canonical) {
    return std::make_shared<CanonicalMeasure>(dim);
  }
  if (dim != 1) throw InvalidParameter("cantor_slope lives on P^1");
  return std::make_shared<CantorSlopeMeasure>();
}

// ---------------------------------------------------------------------------

std::pair<double, double> power_law_constants(int N) {
  if (N < 1) throw InvalidParameter("N must be >= 1");
  const double gamma_ratio = std::tgamma((N + 1) / 2.0) / std::tgamma(N / 2.0);
  const double common = 4.0 * gamma_ratio / (N * std::sqrt(kPi));
  const double a = common * std::pow(5.0 / 6.0, N - 1);
  const double b = common * std::pow(6.0 / 5.0, N);
  return {a, b};
}

PowerLawReport verify_power_law(const MeasureModel& model,
                                std::span<const double> radii,
                                std::span<const ProjPoint> centers) {
  if (radii.empty() || centers.empty()) {
    throw InvalidParameter("need at least one radius and one center");
  }
  for (double r : radii) {
    if (!(r > 0.0) || r > kMaxBallRadius + 1e-15) throw RadiusOutOfRange();
  }
  PowerLawReport report;
  report.radii.assign(radii.begin(), radii.end());
  const double d = model.regularity_exponent();
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t ci = 0; ci < centers.size(); ++ci) {
    for (double r : radii) {
      const double ratio = model.ball_measure(centers[ci], r) / std::pow(r, d);
      report.rows.push_back({static_cast<int>(ci), r, ratio});
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  report.a_emp = lo;
  report.b_emp = hi;
  report.has_paper_constants = model.kind() == MeasureModel::Kind::canonical;
  if (report.has_paper_constants) {
    const auto [a, b] = power_law_constants(model.dim());
    report.paper_a = a;
    report.paper_b = b;
    // The paper's pair bounds the unnormalized (mass 2) cone formula; the
    // normalized measure obeys [a/2, b/2]. 10% slack per the contract.
    report.window_lo = 0.9 * a / 2.0;
    report.window_hi = 1.1 * b / 2.0;
  } else {
    report.paper_a = 0.0;
    report.paper_b = 0.0;
    // Fixed oscillation window for the self-similar measure.
    constexpr double kCantorWindowFactor = 25.0;
    const double mid = std::sqrt(std::max(lo, 1e-300) * std::max(hi, 1e-300));
    report.window_lo = mid / kCantorWindowFactor;
    report.window_hi = mid * kCantorWindowFactor;
  }
  report.violation = lo < report.window_lo || hi > report.window_hi;
  return report;
}

McEstimate monte_carlo_set_measure(
    const CanonicalMeasure& model,
    const std::function<bool(const ProjPoint&)>& predicate,
    std::int64_t samples, std::uint64_t seed, unsigned threads) {
  if (samples < 1) throw InvalidParameter("samples must be >= 1");
  constexpr std::int64_t kChunk = 8192;
  const std::int64_t nchunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::int64_t> hits(nchunks, 0);
  parallel_for(nchunks, threads, [&](std::int64_t ci) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(ci)));
    const std::int64_t lo = ci * kChunk;
    const std::int64_t hi = std::min(lo + kChunk, samples);
    std::int64_t h = 0;
    for (std::int64_t i = lo; i < hi; ++i) {
      if (predicate(model.sample(rng))) ++h;
    }
    hits[ci] = h;
  });
  std::int64_t total = 0;
  for (std::int64_t h : hits) total += h;
  const double p = static_cast<double>(total) / static_cast<double>(samples);
  const double se =
      std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(samples));
  return {p, se, total, samples};
}

double decay_ratio(const MeasureModel& model, const ProjHyperplane& plane,
                   const ProjPoint& x, double r, double eps,
                   std::int64_t samples, std::uint64_t seed) {
  if (!(eps > 0.0)) throw InvalidParameter("eps must be positive");
  if (!(r > 0.0) || r > kMaxBallRadius + 1e-15) throw RadiusOutOfRange();
  if (plane.dim() != x.dim()) throw DimensionMismatch();
  if (eps >= 1.0) return 1.0;  // the neighborhood covers the whole space

  if (model.kind() == MeasureModel::Kind::cantor_slope) {
    // On P^1 the hyperplane is the single point orthogonal to the normal;
    // both the ball and the eps-neighborhood cut chart intervals.
    const double mb = model.ball_measure(x, r);
    if (mb == 0.0) throw DegenerateBall();
    const ProjPoint p =
        normalize_point({-plane.normal()[1], plane.normal()[0]});
    const auto [blo, bhi] = ball_slope_interval(x, r);
    const auto [plo, phi] = ball_slope_interval(p, eps);
    const double ilo = std::max(blo, plo);
    const double ihi = std::min(bhi, phi);
    return cantor_interval_mass(ilo, ihi) / mb;
  }

  if (samples < 1) throw InvalidParameter("samples must be >= 1");
  constexpr std::int64_t kChunk = 8192;
  const std::int64_t nchunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::int64_t> hits(nchunks, 0);
  parallel_for(nchunks, 0, [&](std::int64_t ci) {
    Rng rng(derive_seed(seed ^ 0x5bd1e995ULL, static_cast<std::uint64_t>(ci)));
    const std::int64_t lo = ci * kChunk;
    const std::int64_t hi = std::min(lo + kChunk, samples);
    std::int64_t h = 0;
    for (std::int64_t i = lo; i < hi; ++i) {
      const ProjPoint y = sample_in_ball(x, r, rng);
      if (dist_to_hyperplane(y, plane) < eps) ++h;
    }
    hits[ci] = h;
  });
  std::int64_t total = 0;
  for (std::int64_t h : hits) total += h;
  return static_cast<double>(total) / static_cast<double>(samples);
}

double estimate_decay_exponent(const MeasureModel& model,
                               const ProjHyperplane& plane, const ProjPoint& x,
                               double r, std::span<const double> eps_grid,
                               std::int64_t samples, std::uint64_t seed) {
  std::vector<double> xs, ys;
  for (double eps : eps_grid) {
    const double ratio = decay_ratio(model, plane, x, r, eps, samples, seed);
    if (ratio > 0.0 && ratio < 1.0) {
      xs.push_back(std::log(eps / r));
      ys.push_back(std::log(ratio));
    }
  }
  if (xs.size() < 2) throw InvalidParameter("not enough usable decay samples");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(ys.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

}  // namespace projdio
