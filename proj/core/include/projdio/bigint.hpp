#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace projdio {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const BigRat& v) { return v.convert_to<double>(); }

}  // namespace projdio
