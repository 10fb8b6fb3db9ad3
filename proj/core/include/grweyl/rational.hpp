#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace grweyl {

// Exact scalars: arbitrary-precision integers and rationals over them.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

} // namespace grweyl
