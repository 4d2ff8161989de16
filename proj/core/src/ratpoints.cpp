#include "projdio/ratpoints.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "projdio/constants.hpp"

namespace projdio {

namespace {

std::int64_t igcd(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

// Canonicalizes an int64 vector in place: divide by gcd, flip sign so the
// first nonzero coordinate is positive. Returns false for the zero vector.
bool canonicalize(std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (std::int64_t c : v) g = igcd(g, c);
  if (g == 0) return false;
  if (g > 1) {
    for (auto& c : v) c /= g;
  }
  for (std::int64_t c : v) {
    if (c != 0) {
      if (c < 0) {
        for (auto& x : v) x = -x;
      }
      break;
    }
  }
  return true;
}

ProjRational from_i64(std::span<const std::int64_t> v) {
  ProjRational q;
  q.coords.reserve(v.size());
  std::int64_t h = 0;
  for (std::int64_t c : v) {
    q.coords.emplace_back(c);
    h = std::max(h, c < 0 ? -c : c);
  }
  q.height = h;
  return q;
}

// Recursive shell walker: canonical primitive vectors whose height is
// exactly `h`, emitted in lexicographic order. `seen_nonzero` constrains
// leading coordinates to {0} union [1, h]; `has_h` forces the final
// coordinate onto the shell when nothing reached h yet.
struct ShellWalker {
  int len;
  std::int64_t h;
  const std::function<bool(std::span<const std::int64_t>)>* yield;
  std::vector<std::int64_t> buf;

  bool recurse(int pos, bool seen_nonzero, bool has_h, std::int64_t g) {
    if (pos == len) {
      if (!has_h || g != 1) return true;
      return (*yield)(std::span<const std::int64_t>(buf.data(), buf.size()));
    }
    const bool last = (pos == len - 1);
    auto visit = [&](std::int64_t c) -> bool {
      buf[pos] = c;
      const std::int64_t a = c < 0 ? -c : c;
      return recurse(pos + 1, seen_nonzero || c != 0, has_h || a == h,
                     g == 1 ? 1 : igcd(g, a));
    };
    if (!seen_nonzero) {
      // Before the first nonzero coordinate only 0 and positive values are
      // canonical; 0 sorts first.
      if (!last || has_h) {
        if (!visit(0)) return false;
      }
      const std::int64_t lo = (last && !has_h) ? h : 1;
      for (std::int64_t c = lo; c <= h; ++c) {
        if (!visit(c)) return false;
      }
      return true;
    }
    if (last && !has_h) {
      return visit(-h) && visit(h);
    }
    for (std::int64_t c = -h; c <= h; ++c) {
      if (!visit(c)) return false;
    }
    return true;
  }
};

constexpr std::int64_t kMaxEnumHeight = std::int64_t{1} << 31;

}  // namespace

namespace detail {

std::int64_t to_i64_checked(const BigInt& v) {
  if (v > kMaxEnumHeight || v < -kMaxEnumHeight) {
    throw BudgetExceeded("height bound too large for enumeration");
  }
  return v.convert_to<std::int64_t>();
}

void for_each_primitive(
    int dim, std::int64_t h_lo, std::int64_t h_hi,
    const std::function<bool(std::span<const std::int64_t>)>& yield) {
  if (dim < 1) throw InvalidParameter("dim must be >= 1");
  ShellWalker w;
  w.len = dim + 1;
  w.yield = &yield;
  w.buf.assign(w.len, 0);
  for (std::int64_t h = std::max<std::int64_t>(h_lo, 1); h < h_hi; ++h) {
    w.h = h;
    if (!w.recurse(0, false, false, 0)) return;
  }
}

}  // namespace detail

ProjPoint ProjRational::to_point() const {
  Vec v(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) v[i] = to_double(coords[i]);
  return normalize_point(v);
}

double ProjRational::euclidean_height() const {
  double s = 0.0;
  for (const auto& c : coords) {
    const double d = to_double(c);
    s += d * d;
  }
  return std::sqrt(s);
}

bool ProjRational::operator<(const ProjRational& other) const {
  if (height != other.height) return height < other.height;
  return std::lexicographical_compare(coords.begin(), coords.end(),
                                      other.coords.begin(), other.coords.end());
}

ProjRational make_rational(std::vector<BigInt> v) {
  if (v.size() < 2) throw DimensionMismatch("rational point needs >= 2 coords");
  BigInt g = 0;
  for (const auto& c : v) g = boost::multiprecision::gcd(g, abs(c));
  if (g == 0) throw ZeroVector();
  for (auto& c : v) c /= g;
  for (const auto& c : v) {
    if (c != 0) {
      if (c < 0) {
        for (auto& x : v) x = -x;
      }
      break;
    }
  }
  ProjRational q;
  q.height = 0;
  for (const auto& c : v) q.height = std::max(q.height, BigInt(abs(c)));
  q.coords = std::move(v);
  return q;
}

ProjRational make_rational(std::span<const std::int64_t> v) {
  std::vector<BigInt> coords(v.begin(), v.end());
  return make_rational(std::move(coords));
}

void enumerate_band(int dim, const BigInt& lo, const BigInt& hi,
                    const std::function<bool(const ProjRational&)>& yield) {
  if (lo < 1 || lo >= hi) throw InvalidRange("band requires 1 <= lo < hi");
  const std::int64_t l = detail::to_i64_checked(lo);
  const std::int64_t h = detail::to_i64_checked(hi);
  detail::for_each_primitive(dim, l, h, [&](std::span<const std::int64_t> c) {
    return yield(from_i64(c));
  });
}

void enumerate_up_to(int dim, const BigInt& bound,
                     const std::function<bool(const ProjRational&)>& yield) {
  if (bound < 1) throw InvalidRange("bound must be >= 1");
  enumerate_band(dim, 1, bound + 1, yield);
}

std::vector<ProjRational> enumerate_up_to(int dim, const BigInt& bound) {
  std::vector<ProjRational> out;
  enumerate_up_to(dim, bound, [&](const ProjRational& q) {
    if (out.size() >= guard::kEnumerateMaterializeLimit) {
      throw BudgetExceeded("enumeration too large to materialize");
    }
    out.push_back(q);
    return true;
  });
  return out;
}

std::vector<ProjRational> enumerate_band(int dim, const BigInt& lo,
                                         const BigInt& hi) {
  std::vector<ProjRational> out;
  enumerate_band(dim, lo, hi, [&](const ProjRational& q) {
    if (out.size() >= guard::kEnumerateMaterializeLimit) {
      throw BudgetExceeded("enumeration too large to materialize");
    }
    out.push_back(q);
    return true;
  });
  return out;
}

namespace {

// Window scan: every q in the ball has q_anchor != 0 (see soundness bound in
// rationals_in_ball), so enumerate the anchor coordinate over [1, hi) and
// pin each remaining coordinate to an integer window derived from
// |q_i x_j - q_j x_i| <= r |q| <= r sqrt(len) (hi - 1).
void window_scan(const ProjBall& ball, std::int64_t lo, std::int64_t hi,
                 int anchor, std::vector<ProjRational>& out) {
  const Vec& x = ball.center.rep();
  const int len = static_cast<int>(x.size());
  const double xa = x[anchor];
  const double width = ball.radius * std::sqrt(static_cast<double>(len)) *
                       static_cast<double>(hi - 1) / std::abs(xa);
  std::vector<std::int64_t> q(len, 0);
  std::vector<std::int64_t> wlo(len, 0), whi(len, 0);

  auto emit_candidate = [&](const std::vector<std::int64_t>& cand) {
    std::int64_t h = 0;
    std::int64_t g = 0;
    for (std::int64_t c : cand) {
      h = std::max(h, c < 0 ? -c : c);
      g = igcd(g, c);
    }
    if (h < lo || h >= hi) return;
    // Non-primitive candidates reduce to a point visited under its own
    // (smaller) anchor value; only exact primitives are kept here.
    if (g != 1) return;
    std::vector<std::int64_t> copy = cand;
    canonicalize(copy);  // sign rule only; gcd is already 1
    ProjRational r = from_i64(copy);
    if (delta(ball.center, r.to_point()) <= ball.radius) {
      out.push_back(std::move(r));
    }
  };

  std::function<void(int)> rec = [&](int pos) {
    if (pos == len) {
      emit_candidate(q);
      return;
    }
    if (pos == anchor) {
      rec(pos + 1);
      return;
    }
    for (std::int64_t c = wlo[pos]; c <= whi[pos]; ++c) {
      q[pos] = c;
      rec(pos + 1);
    }
  };

  for (std::int64_t a = 1; a < hi; ++a) {
    q[anchor] = a;
    bool empty = false;
    for (int i = 0; i < len; ++i) {
      if (i == anchor) continue;
      const double center = static_cast<double>(a) * x[i] / xa;
      wlo[i] = static_cast<std::int64_t>(std::floor(center - width));
      whi[i] = static_cast<std::int64_t>(std::ceil(center + width));
      wlo[i] = std::max(wlo[i], -(hi - 1));
      whi[i] = std::min(whi[i], hi - 1);
      if (wlo[i] > whi[i]) empty = true;
    }
    if (!empty) rec(0);
  }
}

}  // namespace

std::vector<ProjRational> rationals_in_ball(const ProjBall& ball,
                                            const BigInt& lo, const BigInt& hi) {
  if (lo < 1 || lo >= hi) throw InvalidRange("band requires 1 <= lo < hi");
  const std::int64_t l = detail::to_i64_checked(lo);
  const std::int64_t h = detail::to_i64_checked(hi);
  const Vec& x = ball.center.rep();
  const int len = static_cast<int>(x.size());

  int anchor = 0;
  for (int i = 1; i < len; ++i) {
    if (std::abs(x[i]) > std::abs(x[anchor])) anchor = i;
  }
  // q_anchor = 0 inside the ball would force 1 <= len r^2 / x_anchor^2, so
  // the window scan is complete whenever r < |x_anchor| / sqrt(len).
  const double sound_limit =
      std::abs(x[anchor]) / std::sqrt(static_cast<double>(len));

  std::vector<ProjRational> out;
  if (ball.radius < 0.99 * sound_limit) {
    window_scan(ball, l, h, anchor, out);
  } else {
    detail::for_each_primitive(len - 1, l, h,
                               [&](std::span<const std::int64_t> c) {
                                 ProjRational q = from_i64(c);
                                 if (delta(ball.center, q.to_point()) <=
                                     ball.radius) {
                                   out.push_back(std::move(q));
                                 }
                                 return true;
                               });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace projdio
