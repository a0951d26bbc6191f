#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hecke {

using BigInt = mpz_class;
// mpq_class results are always canonical (reduced, positive denominator).
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational inverse(const Rational& x) { return Rational(1) / x; }

// n/d in canonical form.
inline Rational ratio(const BigInt& n, const BigInt& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// "num/den" always, including integers ("5/1"), so golden files are stable.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

// Accepts "n", "n/d", with optional leading sign (ASCII '-' or U+2212).
Rational parse_rational(std::string_view text);

Rational rational_pow(const Rational& base, long exponent);

}  // namespace hecke
