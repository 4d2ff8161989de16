#include <doctest.h>

#include <cmath>
#include <random>

#include "projdio/geom.hpp"
#include "projdio/rng.hpp"

using namespace projdio;

namespace {

Vec random_unit(std::mt19937_64& eng, int len) {
  std::normal_distribution<double> g;
  Vec v(len);
  double n = 0.0;
  do {
    for (auto& c : v) c = g(eng);
    n = norm(v);
  } while (n < 1e-6);
  return v;
}

}  // namespace

TEST_CASE("normalize_point examples") {
  CHECK(normalize_point({0.0, 2.0}).rep() == Vec{0.0, 1.0});
  CHECK(normalize_point({-3.0, 0.0, 0.0}).rep() == Vec{1.0, 0.0, 0.0});
  const auto p = normalize_point({1.0, 1.0});
  CHECK(p.rep()[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(p.rep()[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(std::abs(norm(p.rep()) - 1.0) < 1e-12);

  CHECK_THROWS_AS(normalize_point({0.0, 0.0}), ZeroVector);
  CHECK_THROWS_AS(normalize_point({5.0}), DimensionMismatch);

  // Idempotent: normalizing a canonical representative is the identity.
  const auto q = normalize_point({0.3, -0.8, 0.1});
  CHECK(normalize_point(q.rep()).rep() == q.rep());
}

TEST_CASE("wedge_norm examples and bilinear scaling") {
  CHECK(wedge_norm({1, 0}, {0, 1}) == 1.0);
  CHECK(wedge_norm({1, 2, 3}, {2, 4, 6}) == 0.0);
  CHECK(wedge_norm({1, 0, 0}, {1, 1, 1}) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(wedge_norm({1, 0}, {1, 0, 0}), DimensionMismatch);

  std::mt19937_64 eng(7);
  for (int i = 0; i < 200; ++i) {
    Vec x = random_unit(eng, 3), y = random_unit(eng, 3);
    const double w = wedge_norm(x, y);
    Vec ax = x, by = y;
    for (auto& c : ax) c *= -3.5;
    for (auto& c : by) c *= 2.25;
    CHECK(wedge_norm(ax, by) == doctest::Approx(3.5 * 2.25 * w).epsilon(1e-12));
  }
}

TEST_CASE("delta examples") {
  CHECK(delta(normalize_point({1, 0}), normalize_point({0, 1})) == 1.0);
  CHECK(delta(normalize_point({1, 1}), normalize_point({1, 1})) == 0.0);
  CHECK(delta(normalize_point({1, 1}), normalize_point({1, 0})) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(delta(normalize_point({1, 0}), normalize_point({1, 0, 0})),
                  DimensionMismatch);
}

TEST_CASE("delta is a metric: symmetry and triangle inequality, 1e5 triples") {
  std::mt19937_64 eng(42);
  for (int i = 0; i < 100000; ++i) {
    const int len = 2 + static_cast<int>(eng() % 3);
    const auto a = normalize_point(random_unit(eng, len));
    const auto b = normalize_point(random_unit(eng, len));
    const auto c = normalize_point(random_unit(eng, len));
    const double ab = delta(a, b), ba = delta(b, a);
    REQUIRE(ab == ba);  // bit-identical symmetry
    const double ac = delta(a, c), cb = delta(c, b);
    REQUIRE(ab <= ac + cb + 1e-12);
    REQUIRE(ab >= 0.0);
    REQUIRE(ab <= 1.0);
    REQUIRE(delta(a, a) == 0.0);
  }
}

TEST_CASE("Lagrange identity ties wedge to sine of the angle") {
  std::mt19937_64 eng(9);
  for (int i = 0; i < 20000; ++i) {
    const int len = 2 + static_cast<int>(eng() % 3);
    Vec x = random_unit(eng, len), y = random_unit(eng, len);
    const double w = wedge_norm(x, y), d = dot(x, y);
    const double lhs = w * w + d * d;
    const double rhs = dot(x, x) * dot(y, y);
    REQUIRE(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("delta scale invariance is bit-identical for exact scalings") {
  // Integer-valued inputs make the products by 2, -7, 1e6 exact, so the
  // normalized representatives (and hence delta) agree bit for bit.
  std::mt19937_64 eng(11);
  std::uniform_int_distribution<int> coeff(-50, 50);
  for (int i = 0; i < 2000; ++i) {
    Vec v{double(coeff(eng)), double(coeff(eng)), double(coeff(eng))};
    if (max_abs(v) == 0.0) continue;
    Vec w = random_unit(eng, 3);
    const auto pw = normalize_point(w);
    const double base = delta(normalize_point(v), pw);
    for (double a : {2.0, -7.0, 1e6}) {
      Vec av = v;
      for (auto& c : av) c *= a;
      REQUIRE(delta(normalize_point(av), pw) == base);
    }
  }
}

TEST_CASE("dist_to_hyperplane examples") {
  const auto plane = ProjHyperplane::from_normal({0, 0, 1});
  CHECK(dist_to_hyperplane(normalize_point({1, 0, 0}), plane) == 0.0);
  CHECK(dist_to_hyperplane(normalize_point({0, 0, 1}), plane) == 1.0);
  CHECK(dist_to_hyperplane(normalize_point({1, 0, 1}), plane) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(dist_to_hyperplane(normalize_point({1, 0}), plane),
                  DimensionMismatch);
}

TEST_CASE("dist_to_hyperplane agrees with direct minimization of delta") {
  // Oracle: sample many points of the plane (orthogonal complement of the
  // normal) and take the min of delta.
  std::mt19937_64 eng(13);
  for (int trial = 0; trial < 24; ++trial) {
    const int len = 3 + static_cast<int>(eng() % 2);
    Vec n = random_unit(eng, len);
    const auto plane = ProjHyperplane::from_normal(n);
    const auto x = normalize_point(random_unit(eng, len));
    const Vec& nn = plane.normal();

    auto project_to_plane = [&](Vec y) {
      const double yn = dot(y, nn);
      for (int i = 0; i < len; ++i) y[i] -= yn * nn[i];
      return y;
    };

    double best = 1.0;
    Vec arg(len, 0.0);
    for (int s = 0; s < 10000; ++s) {
      Vec y = project_to_plane(random_unit(eng, len));
      if (norm(y) < 1e-9) continue;
      const double d = delta(x, normalize_point(y));
      if (d < best) {
        best = d;
        arg = y;
      }
    }
    // Randomized local descent within the plane; still independent of the
    // closed form, but converges past the global-sampling floor.
    double sigma = 0.1;
    for (int s = 0; s < 3000; ++s) {
      Vec y = arg;
      for (int i = 0; i < len; ++i) {
        y[i] += sigma * (std::generate_canonical<double, 53>(eng) - 0.5);
      }
      y = project_to_plane(y);
      if (norm(y) < 1e-9) continue;
      const double d = delta(x, normalize_point(y));
      if (d < best) {
        best = d;
        arg = y;
      }
      if (s % 300 == 299) sigma *= 0.5;
    }
    const double closed = dist_to_hyperplane(x, plane);
    REQUIRE(best >= closed - 1e-12);
    REQUIRE(best - closed <= 1e-4);
  }
}

TEST_CASE("slope chart") {
  CHECK(slope_embed(0.0) == normalize_point({1, 0}));
  const auto p = slope_embed(1.0);
  CHECK(p.rep()[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(slope_extract(slope_embed(0.5)).value() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(slope_extract(slope_embed(-17.25)).value() ==
        doctest::Approx(-17.25).epsilon(1e-13));
  CHECK(!slope_extract(normalize_point({0, 1})).has_value());
  CHECK_THROWS_AS(slope_extract(normalize_point({1, 0, 0})), DimensionMismatch);
}

TEST_CASE("ProjPoint equality uses the sine metric with sign freedom") {
  CHECK(normalize_point({2, 2}) == normalize_point({-1, -1}));
  CHECK(normalize_point({1, 0}) != normalize_point({0, 1}));
}

TEST_CASE("ProjBall validates the radius") {
  const auto c = normalize_point({1, 0});
  CHECK_THROWS_AS(ProjBall(c, 0.0), RadiusOutOfRange);
  CHECK_THROWS_AS(ProjBall(c, 0.9), RadiusOutOfRange);
  CHECK(ProjBall(c, kMaxBallRadius).radius == kMaxBallRadius);
}
