#pragma once

#include <gmpxx.h>

#include <string>

namespace verlinde {

using Rational = mpq_class;
using Integer = mpz_class;

/// Floor of a rational as an integer (rounds toward minus infinity).
Integer rat_floor(const Rational& q);

bool is_integer(const Rational& q);

/// q - floor(q), always in [0, 1).
Rational frac_part(const Rational& q);

/// Distance from q to the nearest integer, in [0, 1/2].
Rational dist_to_int(const Rational& q);

/// Serializes as "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

/// Parses "p", "p/q", with optional leading '-'. Throws std::invalid_argument.
Rational parse_rational(const std::string& s);

/// Bernoulli number B_n in the convention z/(e^z - 1) = sum B_n z^n / n!
/// (so B_1 = -1/2). Memoized, safe for concurrent callers.
Rational bernoulli_number(int n);

Integer binomial(long n, long k);

Integer int_pow(const Integer& base, unsigned long e);

Rational int_pow(const Rational& base, unsigned long e);

}  // namespace verlinde
