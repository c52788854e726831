#pragma once

#include <gmpxx.h>

#include <string>

namespace rotor {

// Always canonical: mpq_class arithmetic keeps gcd(num, den) = 1 and den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Accepts "n" or "p/q" with optional leading minus; throws Error(InvalidInput).
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);
// r - floor(r), in [0, 1).
Rational frac(const Rational& r);
bool is_integer(const Rational& r);

// Throws Error(InvalidInput) when the value does not fit.
long to_long(const Integer& z);

}  // namespace rotor
