#pragma once

#include <cstdint>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t n);

// An element of Q(zeta_n), stored densely as a polynomial in zeta_n of degree
// below phi(n). Reduction modulo Phi_n happens eagerly, so two elements of the
// same order are equal iff their coefficient vectors are equal. Binary
// operations on elements of different orders lift both to the lcm order.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(const Rational& value);  // NOLINT: rationals embed implicitly
  Cyclotomic(long value) : Cyclotomic(Rational(value)) {}
  Cyclotomic(const Rational& value, std::int64_t order);

  // zeta_order^k for any integer k.
  static Cyclotomic zeta_power(std::int64_t order, std::int64_t k);
  static Cyclotomic from_coefficients(std::int64_t order, std::vector<Rational> coeffs);

  std::int64_t order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Cyclotomic lifted(std::int64_t new_order) const;

  bool is_zero() const;
  bool is_rational() const;
  // Constant coefficient; meaningful only when is_rational().
  Rational rational_value() const;

  Cyclotomic inverse() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  void reduce(std::vector<Rational> poly);

  std::int64_t order_ = 1;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Cyclotomic inverse(const Cyclotomic& x) { return x.inverse(); }

}  // namespace hecke
