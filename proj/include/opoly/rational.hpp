#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace opoly {

// Exact rational scalar. GMP keeps mpq_class values canonical (reduced,
// positive denominator) through every arithmetic operation.
using Rational = mpq_class;

// "p/q", or "p" when q = 1. Sign always on the numerator.
std::string to_string(const Rational& x);

// Accepts "p" or "p/q" with an optional leading '-' and decimal digits.
// Rejects zero denominators and anything else with ErrorKind::ParseError.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned long exponent);

// Rising factorial (a)_n = a (a+1) ... (a+n-1).
Rational pochhammer(const Rational& a, unsigned long n);

std::vector<std::string> to_strings(const std::vector<Rational>& xs);

}  // namespace opoly
