#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dulac {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline int sign(const Rational& r) { return r.sign(); }

// r^k for integer k (k < 0 requires r != 0).
Rational rational_pow(const Rational& r, long k);

// Parses "p/q", plain integers and decimal literals ("0.5", "-3.25e2") exactly.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& r);

Integer factorial(unsigned n);

}  // namespace dulac
