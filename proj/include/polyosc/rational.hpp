#ifndef POLYOSC_RATIONAL_HPP
#define POLYOSC_RATIONAL_HPP

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyosc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" (q > 0 after normalization). Anything else,
// including floating-point forms, is rejected.
std::optional<Rational> parse_rational(const std::string& text);

std::string to_string(const Rational& r);

double to_double(const Rational& r);
long double to_long_double(const Rational& r);

// Largest integer <= r.
Integer floor_to_integer(const Rational& r);

// If r = (p/q)^2 for some rational p/q >= 0, returns p/q.
std::optional<Rational> exact_sqrt(const Rational& r);

}  // namespace polyosc

#endif
