#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace rci {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q", "-p/q" or an integer literal. Throws Error(InvalidInput) on anything else.
Rational parse_rational(std::string_view text);

/// Lowest terms, positive denominator, "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integer(const Rational& q);
Integer to_integer(const Rational& q);  // requires is_integer(q)

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Three-way comparison for lexicographic ordering of coordinate tuples.
std::strong_ordering compare(const Rational& a, const Rational& b);

}  // namespace rci
