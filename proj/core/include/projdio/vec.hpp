#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "projdio/errors.hpp"

namespace projdio {

using Vec = std::vector<double>;

inline double dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatch();
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline double norm(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

inline double max_abs(const Vec& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace projdio
