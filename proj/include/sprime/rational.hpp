#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sprime {

using Integer = mpz_class;
using Rational = mpq_class;

/// Lowest-terms string: "p/q", or "p" when q = 1.
std::string to_canonical_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws ParseError (location left empty) on bad input.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned exponent);
Integer pow(const Integer& base, unsigned exponent);

/// True and sets `root` when q is the square of a rational.
bool exact_sqrt(const Rational& q, Rational& root);

// Rational bounds on sqrt(q) for q >= 0. Both are exact when q is a perfect square.
Rational sqrt_upper(const Rational& q);
Rational sqrt_lower(const Rational& q);

/// Smallest integer N >= 1 with N^p >= q (q >= 0, p >= 1).
Integer ceil_root(const Rational& q, unsigned p);

/// Decimal rendering with `digits` significant digits, e.g. "1.0400e+0".
std::string to_scientific(const Rational& q, int digits = 6);

}  // namespace sprime
