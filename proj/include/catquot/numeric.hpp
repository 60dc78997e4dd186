#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace catquot {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer &v) { return v.str(); }

/// "n" for integral values, "n/d" otherwise.
inline std::string to_string(const Rational &v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1)
    return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline bool is_integral(const Rational &v) {
  return boost::multiprecision::denominator(v) == 1;
}

} // namespace catquot
