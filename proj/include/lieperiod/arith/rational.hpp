// Exact scalars: arbitrary-precision integers and rationals.
#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace lieperiod::arith {

using Integer = mpz_class;

/// Exact fraction, always kept in lowest terms with a positive denominator.
/// Every constructor path below canonicalizes, so equality is structural.
using Rational = mpq_class;

/// p/q in lowest terms; throws std::domain_error when q == 0.
Rational fraction(const Integer& p, const Integer& q);

/// "p/q", or "p" when q == 1. Locale independent.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Inverse of to_string. Accepts "p", "-p", "p/q"; throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// C(n, k) for n >= 0, and 0 when k < 0 or k > n. A negative upper index
/// also yields 0: no formula here needs the generalized (-1)^k form, and the
/// zero keeps the shifted-index sums of the derivation corollaries literal.
Integer binomial(long n, long k);

/// n! for n >= 0; throws std::invalid_argument on negative n.
Integer factorial(long n);

/// Least common multiple of the denominators (1 for an empty range).
Integer common_denominator(std::span<const Rational> values);

}  // namespace lieperiod::arith

namespace lieperiod {
using arith::Integer;
using arith::Rational;
}  // namespace lieperiod
