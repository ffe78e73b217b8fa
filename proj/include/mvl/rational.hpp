#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mvl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

// Accepts "p", "p/q" and decimal notation ("-0.125", "2.5e-3"); the result is exact.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer pow_int(unsigned base, std::size_t exponent);

// -1, 0 or +1.
int sgn(const Rational& value);

Rational dot(std::span<const Rational> lhs, std::span<const Rational> rhs);

}  // namespace mvl
