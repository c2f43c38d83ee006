#pragma once

#include <gmpxx.h>

#include <string>

namespace einz {

/// Exact probability. Every engine quantity is carried as a reduced fraction.
using Rational = mpq_class;

double to_double(const Rational& value);

/// Decimal rendering with round-half-up at `places` digits after the point.
std::string to_fixed(const Rational& value, int places);

/// "num/den", or just "num" when the denominator is 1.
std::string to_fraction(const Rational& value);

Rational make_rational(long num, long den);

}  // namespace einz
