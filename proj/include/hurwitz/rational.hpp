#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hurwitz {

/// Exact rational number; GMP keeps it canonical (reduced, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

/// "num/den" form, integers included ("7/1").
std::string to_string(const Rational& x);

/// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// base^exponent for a nonzero base; negative exponents give the reciprocal.
Rational rational_pow(const BigInt& base, long exponent);

Rational factorial(unsigned long n);

/// num/den in canonical form (mpq_class(num, den) alone does not reduce).
inline Rational ratio(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}
inline Rational ratio(long num, long den) { return ratio(BigInt(num), BigInt(den)); }

}  // namespace hurwitz
