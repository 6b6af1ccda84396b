#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nilcoh {

// mpq_class keeps values canonical (lowest terms, positive denominator)
// after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);

/// Strict parse of "p", "-p", "p/q" or "-p/q" with q > 0. Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" or "p".
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace nilcoh
