#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "projdio/ratpoints.hpp"

using namespace projdio;

namespace {

// Brute-force oracle: scan the whole integer box [-B, B]^{N+1}, reduce each
// nonzero vector, dedupe. Completely independent of the shell enumerator.
std::set<std::vector<BigInt>> brute_force_coords(int dim, int B) {
  std::set<std::vector<BigInt>> out;
  const int len = dim + 1;
  std::vector<int> v(len, -B);
  while (true) {
    bool nonzero = false;
    for (int c : v) nonzero |= (c != 0);
    if (nonzero) {
      std::vector<BigInt> coords(v.begin(), v.end());
      out.insert(make_rational(std::move(coords)).coords);
    }
    int i = len - 1;
    while (i >= 0 && v[i] == B) v[i--] = -B;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

}  // namespace

TEST_CASE("make_rational examples") {
  auto q = make_rational(std::vector<BigInt>{2, 4, 6});
  CHECK(q.coords == std::vector<BigInt>{1, 2, 3});
  CHECK(q.height == 3);

  q = make_rational(std::vector<BigInt>{-3, 6});
  CHECK(q.coords == std::vector<BigInt>{1, -2});
  CHECK(q.height == 2);

  q = make_rational(std::vector<BigInt>{0, 0, 5});
  CHECK(q.coords == std::vector<BigInt>{0, 0, 1});
  CHECK(q.height == 1);

  CHECK_THROWS_AS(make_rational(std::vector<BigInt>{0, 0}), ZeroVector);

  // Scale invariance: make_rational(a*v) == make_rational(v).
  std::mt19937_64 eng(5);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int i = 0; i < 500; ++i) {
    std::vector<BigInt> v{coeff(eng), coeff(eng), coeff(eng)};
    bool zero = std::all_of(v.begin(), v.end(),
                            [](const BigInt& c) { return c == 0; });
    if (zero) continue;
    auto base = make_rational(v);
    for (int a : {3, -11, 1000}) {
      auto w = v;
      for (auto& c : w) c *= a;
      CHECK(make_rational(w) == base);
    }
  }
}

TEST_CASE("enumerate_up_to small cases") {
  auto pts = enumerate_up_to(1, 1);
  REQUIRE(pts.size() == 4);
  // Deterministic order: height, then lexicographic on coords.
  CHECK(pts[0].coords == std::vector<BigInt>{0, 1});
  CHECK(pts[1].coords == std::vector<BigInt>{1, -1});
  CHECK(pts[2].coords == std::vector<BigInt>{1, 0});
  CHECK(pts[3].coords == std::vector<BigInt>{1, 1});

  auto pts2 = enumerate_up_to(1, 2);
  REQUIRE(pts2.size() == 8);
  std::set<std::vector<BigInt>> added;
  for (std::size_t i = 4; i < pts2.size(); ++i) added.insert(pts2[i].coords);
  CHECK(added == std::set<std::vector<BigInt>>{
                     {1, -2}, {1, 2}, {2, -1}, {2, 1}});

  CHECK(enumerate_up_to(2, 1).size() == 13);
  CHECK_THROWS_AS(enumerate_up_to(1, 0), InvalidRange);
}

TEST_CASE("enumerate_band") {
  auto band = enumerate_band(1, 1, 2);
  CHECK(band.size() == 4);
  for (const auto& q : band) CHECK(q.height == 1);

  auto band2 = enumerate_band(1, 2, 3);
  CHECK(band2.size() == 4);
  for (const auto& q : band2) CHECK(q.height == 2);

  CHECK_THROWS_AS(enumerate_band(1, 5, 5), InvalidRange);
  CHECK_THROWS_AS(enumerate_band(1, 3, 2), InvalidRange);
  CHECK_THROWS_AS(enumerate_band(1, 0, 2), InvalidRange);
}

TEST_CASE("completeness oracle, duplicates, monotone counts") {
  struct Case {
    int dim, bmax;
  };
  for (auto [dim, bmax] : {Case{1, 50}, Case{2, 12}, Case{3, 6}}) {
    auto pts = enumerate_up_to(dim, bmax);

    std::set<std::vector<BigInt>> seen;
    BigInt prev_height = 0;
    for (const auto& q : pts) {
      REQUIRE(q.height >= prev_height);  // nondecreasing height order
      prev_height = q.height;
      REQUIRE(seen.insert(q.coords).second);  // no duplicates
    }
    REQUIRE(seen == brute_force_coords(dim, bmax));

    // Monotone counts in B.
    std::size_t prev = 0;
    for (int b = 1; b <= bmax; ++b) {
      const std::size_t count = enumerate_up_to(dim, b).size();
      REQUIRE(count > prev);
      prev = count;
    }
  }
}

TEST_CASE("P^1 growth matches 4 * sum of Euler phi exactly") {
  const int bmax = 200;
  std::vector<int> phi(bmax + 1);
  for (int i = 0; i <= bmax; ++i) phi[i] = i;
  for (int i = 2; i <= bmax; ++i) {
    if (phi[i] == i) {  // prime
      for (int j = i; j <= bmax; j += i) phi[j] -= phi[j] / i;
    }
  }
  long long total = 0;
  std::map<long long, long long> by_height;
  enumerate_up_to(1, bmax, [&](const ProjRational& q) {
    ++total;
    ++by_height[q.height.convert_to<long long>()];
    return true;
  });
  long long expect = 0;
  for (int b = 1; b <= bmax; ++b) {
    expect += 4LL * phi[b];
    REQUIRE(by_height[b] == 4LL * phi[b]);
  }
  REQUIRE(total == expect);
}

TEST_CASE("rationals_in_ball examples") {
  const auto center = normalize_point({1, 0});
  auto hits = rationals_in_ball(ProjBall(center, 0.1), 1, 2);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].coords == std::vector<BigInt>{1, 0});

  // Radius sin 1 around phi(1,1): exactly the height-1 points within sin 1.
  const auto c2 = normalize_point({1, 1});
  auto all = rationals_in_ball(ProjBall(c2, kMaxBallRadius), 1, 2);
  std::set<std::vector<BigInt>> got;
  for (const auto& q : all) got.insert(q.coords);
  std::set<std::vector<BigInt>> expect;
  for (const auto& q : enumerate_band(1, 1, 2)) {
    if (delta(c2, q.to_point()) <= kMaxBallRadius) expect.insert(q.coords);
  }
  CHECK(got == expect);

  // Huge band, tiny ball far from every such rational.
  const auto far = normalize_point({1.0, 0.3333333383333});
  auto none = rationals_in_ball(ProjBall(far, 1e-12), 1000000, 1000001);
  CHECK(none.empty());

  CHECK_THROWS_AS(rationals_in_ball(ProjBall(center, 0.1), 3, 3), InvalidRange);
}

TEST_CASE("rationals_in_ball equals brute-force band filter") {
  std::mt19937_64 eng(2718);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = 1 + static_cast<int>(eng() % 2);
    Vec v(dim + 1);
    for (auto& c : v) c = g(eng);
    if (norm(v) < 1e-6) continue;
    const auto center = normalize_point(v);
    const double radius =
        (trial % 3 == 0) ? 0.8 : std::pow(10.0, -1.0 - double(eng() % 4));
    const ProjBall ball(center, radius);
    const int lo = 1 + static_cast<int>(eng() % 3);
    const int hi = lo + 1 + static_cast<int>(eng() % (dim == 1 ? 20 : 8));

    auto fast = rationals_in_ball(ball, lo, hi);
    std::vector<ProjRational> slow;
    enumerate_band(dim, lo, hi, [&](const ProjRational& q) {
      if (delta(center, q.to_point()) <= radius) slow.push_back(q);
      return true;
    });
    std::sort(slow.begin(), slow.end());
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      REQUIRE(fast[i] == slow[i]);
    }
  }
}

TEST_CASE("euclidean height") {
  auto q = make_rational(std::vector<BigInt>{3, 4});
  CHECK(q.euclidean_height() == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(q.height == 4);
}
