#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace kingdon {

// Exact rational scalar. Kept in lowest terms with positive denominator;
// equality is value equality. The base field is Q throughout.
using Scalar = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Accepts "p", "-p", "p/q" (and "-p/q"); whitespace is not allowed.
Scalar parse_scalar(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string format_scalar(const Scalar& s);

int sign_of(const Scalar& s);

// Exact square root when s is the square of a rational, nullopt otherwise.
std::optional<Scalar> rational_sqrt(const Scalar& s);

}  // namespace kingdon
