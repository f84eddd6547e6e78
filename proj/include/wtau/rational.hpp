#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wtau {

/// Exact rational number. mpq_class keeps the canonical form
/// (lowest terms, positive denominator, zero as 0/1) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical p/q. Throws DivisionByZero when q == 0.
Rational rational_normalize(const Integer& p, const Integer& q);

/// Canonical p/q from machine integers. Throws DivisionByZero when q == 0.
Rational ratio(long p, long q);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q", with optional leading sign.
Rational parse_rational(std::string_view text);

Rational binomial(int n, int k);
Rational factorial(int n);
Rational power(const Rational& base, int exponent);

}  // namespace wtau
