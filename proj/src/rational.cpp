#include "hecke/rational.hpp"

#include "hecke/error.hpp"

namespace hecke {

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const BigInt& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  bool negative = false;
  if (s.rfind("\xE2\x88\x92", 0) == 0) {  // U+2212 MINUS SIGN
    negative = true;
    s.erase(0, 3);
  } else if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char ch : t)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  BigInt d(den);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(BigInt(num), d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw Error(ErrorKind::NonUnitLeading, "0 raised to a negative power");
    return rational_pow(inverse(base), -exponent);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

}  // namespace hecke
