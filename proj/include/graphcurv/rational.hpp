#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace graphcurv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "num/den" form; integers keep an explicit "/1" so report
/// fields round-trip without a type tag.
std::string to_fraction_string(const Rational& q);

/// Parses "num/den" or a plain integer. Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_fraction(const std::string& text);

bool is_integer(const Rational& q);

double to_double(const Rational& q);

}  // namespace graphcurv
