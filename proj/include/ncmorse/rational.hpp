#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ncmorse {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "n" or "p/q" (optional leading '-', q > 0). Throws invalid_input_error.
Rational parse_rational(std::string_view text);

/// Canonical text form: "n" for integers, "p/q" otherwise (reduced, q > 0).
std::string to_string(const Rational& value);

Integer parse_integer(std::string_view text);

}  // namespace ncmorse
