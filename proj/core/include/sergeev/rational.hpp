#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sergeev {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// True when the denominator is 1.
bool is_integer(const Rational& value);

/// True when the denominator is a power of two (including 2^0).
bool has_dyadic_denominator(const Rational& value);

/// If |value| = 2^k for some k >= 0, returns k; otherwise -1.
long power_of_two_exponent(const Rational& value);

}  // namespace sergeev
