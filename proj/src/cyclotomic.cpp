#include "hecke/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "hecke/arith.hpp"
#include "hecke/error.hpp"

namespace hecke {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

// Remainder of p modulo a monic-or-not divisor m (both nonempty after trim).
Poly poly_rem(Poly p, const Poly& m) {
  trim(p);
  const std::size_t dm = m.size() - 1;
  Rational lead_inv = inverse(m.back());
  while (p.size() > dm) {
    Rational factor = p.back() * lead_inv;
    std::size_t shift = p.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) p[shift + i] -= factor * m[i];
    p.pop_back();
    trim(p);
  }
  return p;
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  Rational lead_inv = inverse(b.back());
  while (r.size() >= b.size()) {
    Rational factor = r.back() * lead_inv;
    std::size_t shift = r.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= factor * b[i];
    r.pop_back();
    trim(r);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

const Poly& modulus(std::int64_t n) {
  static std::mutex lock;
  static std::map<std::int64_t, Poly> cache;
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  const auto& ints = cyclotomic_polynomial(n);
  Poly p(ints.begin(), ints.end());
  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t n) {
  static std::mutex lock;
  static std::map<std::int64_t, std::vector<BigInt>> cache;
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  Poly num(static_cast<std::size_t>(n) + 1, Rational(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (auto d : divisors(n)) {
    if (d == n) continue;
    const auto& phi_d = cyclotomic_polynomial(d);
    Poly q, r;
    poly_divmod(num, Poly(phi_d.begin(), phi_d.end()), q, r);
    num = q;
  }
  std::vector<BigInt> out;
  for (const auto& c : num) out.push_back(c.get_num());
  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(n, std::move(out)).first->second;
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(const Rational& value) : order_(1), coeffs_(1, value) {}

Cyclotomic::Cyclotomic(const Rational& value, std::int64_t order)
    : order_(order), coeffs_(static_cast<std::size_t>(euler_phi(order)), Rational(0)) {
  coeffs_[0] = value;
}

Cyclotomic Cyclotomic::zeta_power(std::int64_t order, std::int64_t k) {
  Poly p(static_cast<std::size_t>(mod_floor(k, order)) + 1, Rational(0));
  p.back() = 1;
  Cyclotomic z(Rational(0), order);
  z.reduce(std::move(p));
  return z;
}

Cyclotomic Cyclotomic::from_coefficients(std::int64_t order, std::vector<Rational> coeffs) {
  Cyclotomic z(Rational(0), order);
  z.reduce(std::move(coeffs));
  return z;
}

void Cyclotomic::reduce(std::vector<Rational> poly) {
  const std::size_t phi = static_cast<std::size_t>(euler_phi(order_));
  if (poly.size() > phi) poly = poly_rem(std::move(poly), modulus(order_));
  poly.resize(phi, Rational(0));
  coeffs_ = std::move(poly);
}

Cyclotomic Cyclotomic::lifted(std::int64_t new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0) throw Error(ErrorKind::UnsupportedParameter, "cyclotomic lift to a non-multiple order");
  const std::size_t step = static_cast<std::size_t>(new_order / order_);
  Poly p((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  Cyclotomic z(Rational(0), new_order);
  z.reduce(std::move(p));
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!hecke::is_zero(c)) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!hecke::is_zero(coeffs_[i])) return false;
  return true;
}

Rational Cyclotomic::rational_value() const { return coeffs_[0]; }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorKind::NonUnitLeading, "inverse of zero cyclotomic element");
  if (is_rational()) return Cyclotomic(hecke::inverse(coeffs_[0]), order_);
  // Extended Euclid: find s with s * a = 1 mod Phi_n.
  Poly r0 = modulus(order_), r1 = coeffs_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  Rational c = hecke::inverse(r1[0]);
  for (auto& x : s1) x *= c;
  Cyclotomic z(Rational(0), order_);
  z.reduce(std::move(s1));
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.order_ != order_) {
    std::int64_t l = lcm64(order_, rhs.order_);
    *this = lifted(l);
    return *this += rhs.lifted(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (rhs.order_ != order_) {
    if (rhs.is_rational()) return *this *= rhs.coeffs_[0];
    std::int64_t l = lcm64(order_, rhs.order_);
    if (is_rational()) {
      Rational c = coeffs_[0];
      *this = rhs.lifted(l);
      return *this *= c;
    }
    *this = lifted(l);
    return *this *= rhs.lifted(l);
  }
  if (rhs.is_rational()) return *this *= rhs.coeffs_[0];
  if (is_rational()) {
    Rational c = coeffs_[0];
    *this = rhs;
    return *this *= c;
  }
  reduce(poly_mul(coeffs_, rhs.coeffs_));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z = *this;
  for (auto& c : z.coeffs_) c = -c;
  return z;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  std::int64_t l = lcm64(a.order_, b.order_);
  return a.lifted(l).coeffs_ == b.lifted(l).coeffs_;
}

}  // namespace hecke
