#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace kptau {

using Integer = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always reduced, denominator > 0, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p", "p/q" (q > 0 after normalization). Throws std::invalid_argument
// on malformed input.
Rational parse_rational(std::string_view text);

// Canonical rendering: "p" for integers, "p/q" otherwise, sign on the numerator.
std::string rational_to_string(const Rational& r);

}  // namespace kptau
