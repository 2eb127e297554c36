#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace multilin {

/// Arbitrary precision rational in canonical form (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p/q" or a finite decimal such as "0.25". Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Decimal rendering rounded to `digits` fractional digits. Lossy.
std::string to_decimal(const Rational& value, int digits = 12);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// Scales a rational vector by the lcm of its denominators and divides by the gcd of the
/// numerators, giving the primitive integer vector on the same ray. Zero stays zero.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& values);

/// Divides an integer vector by the gcd of its entries in place.
void make_primitive(std::vector<Integer>& values);

}  // namespace multilin
