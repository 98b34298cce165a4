#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace qsrep {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// Exact conversion; every finite double is a binary rational.
bigrat rat_from_double(double x);

double rat_to_double(const bigrat& r);

// "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const bigrat& r);

// Accepts "p/q" and bare integers; anything else (decimals included) returns
// nullopt so the caller can fall back to the floating-point path. A malformed
// fraction such as "1/0" throws.
std::optional<bigrat> parse_rational(const std::string& text);

} // namespace qsrep
