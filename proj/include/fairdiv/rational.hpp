#pragma once

#include <string>

#include <gmpxx.h>

namespace fairdiv {

// Every weight, utility, threshold and price in this library is an exact
// rational. Decision predicates never touch floating point.
using Rational = mpq_class;

// Accepts an optionally signed integer ("42", "-7"), a fraction "p/q" with
// positive q, or a finite decimal ("0.125"). Anything else, including a zero
// denominator, throws ParseError. Result is canonicalized.
Rational parse_rational(const std::string& text);

// Lowest-terms rendering: "p/q", or just "p" when the value is integral.
std::string to_fraction_string(const Rational& value);

// Decimal rendering for human-facing output, rounded half-up to at most
// max_digits fractional digits, trailing zeros dropped. Exact whenever the
// denominator divides a power of ten within the digit budget.
std::string to_decimal_string(const Rational& value, int max_digits = 6);

}  // namespace fairdiv
