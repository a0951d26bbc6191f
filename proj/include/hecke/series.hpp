#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hecke/arith.hpp"
#include "hecke/cyclotomic.hpp"
#include "hecke/error.hpp"
#include "hecke/rational.hpp"

namespace hecke {

// Truncated Laurent series in q^{1/D}. Coefficient i of coeffs_ belongs to the
// exponent (order_ + i)/D. Every exponent numerator below end_ is known: the
// ones below order_ are zero, the rest are stored. A zero series has no stored
// coefficients and order_ == end_.
template <class C>
class Series {
 public:
  using Coeff = C;

  Series() = default;

  static Series from_coeffs(std::int64_t order, std::vector<C> coeffs, std::int64_t den = 1) {
    Series s;
    s.den_ = den;
    s.order_ = order;
    s.end_ = order + static_cast<std::int64_t>(coeffs.size());
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
  }

  static Series zero(std::int64_t end, std::int64_t den = 1) {
    Series s;
    s.den_ = den;
    s.order_ = s.end_ = end;
    return s;
  }

  // c * q^{e/den}, known for numerators below end.
  static Series monomial(const C& c, std::int64_t e, std::int64_t end, std::int64_t den = 1) {
    if (end <= e) return zero(end, den);
    std::vector<C> v(static_cast<std::size_t>(end - e), C(0));
    v[0] = c;
    return from_coeffs(e, std::move(v), den);
  }

  std::int64_t den() const { return den_; }
  std::int64_t order() const { return order_; }
  std::int64_t end() const { return end_; }
  std::int64_t precision() const { return end_ - order_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Same grid, same known range, same coefficients.
  friend bool operator==(const Series& a, const Series& b) {
    return a.den_ == b.den_ && a.order_ == b.order_ && a.end_ == b.end_ && a.coeffs_ == b.coeffs_;
  }
  const C& leading() const {
    if (coeffs_.empty()) throw Error(ErrorKind::NonUnitLeading, "zero series has no leading coefficient");
    return coeffs_.front();
  }
  const std::vector<C>& coeffs() const { return coeffs_; }

  // Coefficient at exponent e/den.
  C coeff(std::int64_t e) const {
    if (e >= end_)
      throw Error(ErrorKind::PrecisionExhausted,
                  "coefficient " + std::to_string(e) + "/" + std::to_string(den_) + " beyond precision");
    if (e < order_) return C(0);
    return coeffs_[static_cast<std::size_t>(e - order_)];
  }

  // Coefficient of q^m for an integer m.
  C coeff_int(std::int64_t m) const { return coeff(m * den_); }

  bool known(std::int64_t e) const { return e < end_; }

  // Same series on the finer grid new_den (a multiple of den).
  Series regrid(std::int64_t new_den) const {
    if (new_den == den_) return *this;
    if (new_den % den_ != 0) throw Error(ErrorKind::UnsupportedParameter, "regrid to a non-multiple denominator");
    const std::int64_t f = new_den / den_;
    Series s;
    s.den_ = new_den;
    s.order_ = order_ * f;
    // Off-grid coefficients are exact zeros, so the known range scales.
    s.end_ = end_ * f;
    if (coeffs_.empty()) {
      s.order_ = s.end_;
      return s;
    }
    s.coeffs_.assign(static_cast<std::size_t>(s.end_ - s.order_), C(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i * static_cast<std::size_t>(f)] = coeffs_[i];
    return s;
  }

  // Drops everything at or beyond numerator new_end.
  Series truncated(std::int64_t new_end) const {
    if (new_end >= end_) return *this;
    Series s = *this;
    s.end_ = new_end;
    if (new_end <= order_) {
      s.coeffs_.clear();
      s.order_ = new_end;
    } else {
      s.coeffs_.resize(static_cast<std::size_t>(new_end - order_));
    }
    return s;
  }

  // Truncates to exponents below m (an integer power of q).
  Series truncated_int(std::int64_t m) const { return truncated(m * den_); }

  // Multiplies by q^{k/den}.
  Series shifted(std::int64_t k) const {
    Series s = *this;
    s.order_ += k;
    s.end_ += k;
    return s;
  }

  Series operator-() const {
    Series s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
  }

  friend Series operator+(const Series& a, const Series& b) {
    std::int64_t l = lcm64(a.den_, b.den_);
    if (a.den_ != l || b.den_ != l) return a.regrid(l) + b.regrid(l);
    Series s;
    s.den_ = l;
    s.end_ = std::min(a.end_, b.end_);
    s.order_ = std::min({a.order_, b.order_, s.end_});
    s.coeffs_.assign(static_cast<std::size_t>(s.end_ - s.order_), C(0));
    for (std::int64_t e = std::max(a.order_, s.order_); e < std::min(a.order_ + (std::int64_t)a.coeffs_.size(), s.end_); ++e)
      s.coeffs_[static_cast<std::size_t>(e - s.order_)] += a.coeffs_[static_cast<std::size_t>(e - a.order_)];
    for (std::int64_t e = std::max(b.order_, s.order_); e < std::min(b.order_ + (std::int64_t)b.coeffs_.size(), s.end_); ++e)
      s.coeffs_[static_cast<std::size_t>(e - s.order_)] += b.coeffs_[static_cast<std::size_t>(e - b.order_)];
    s.normalize();
    return s;
  }

  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

  friend Series operator*(const Series& a, const Series& b) {
    std::int64_t l = lcm64(a.den_, b.den_);
    if (a.den_ != l || b.den_ != l) return a.regrid(l) * b.regrid(l);
    Series s;
    s.den_ = l;
    s.order_ = a.order_ + b.order_;
    s.end_ = std::min(a.end_ + b.order_, b.end_ + a.order_);
    if (a.is_zero() || b.is_zero()) {
      s.order_ = s.end_;
      return s;
    }
    const std::size_t n = static_cast<std::size_t>(s.end_ - s.order_);
    s.coeffs_.assign(n, C(0));
    for (std::size_t i = 0; i < std::min(n, a.coeffs_.size()); ++i) {
      if (hecke::is_zero(a.coeffs_[i])) continue;
      const std::size_t lim = std::min(n - i, b.coeffs_.size());
      for (std::size_t j = 0; j < lim; ++j) {
        if (hecke::is_zero(b.coeffs_[j])) continue;
        s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    s.normalize();
    return s;
  }

  friend Series operator*(const Series& a, const C& c) {
    Series s = a;
    for (auto& x : s.coeffs_) x = x * c;
    s.normalize();
    return s;
  }
  friend Series operator*(const C& c, const Series& a) { return a * c; }

  Series inverse() const {
    if (is_zero()) throw Error(ErrorKind::NonUnitLeading, "division by a series with no nonzero known coefficient");
    const C lead_inv = hecke::inverse(coeffs_.front());
    const std::size_t n = coeffs_.size();
    std::vector<C> b(n, C(0));
    b[0] = lead_inv;
    for (std::size_t k = 1; k < n; ++k) {
      C acc(0);
      for (std::size_t i = 1; i <= k; ++i) {
        if (hecke::is_zero(coeffs_[i])) continue;
        acc += coeffs_[i] * b[k - i];
      }
      b[k] = -(acc * lead_inv);
    }
    return from_coeffs(-order_, std::move(b), den_);
  }

  friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

  Series pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    // f^0 = 1, known to the relative precision of f.
    if (k == 0) return monomial(C(1), 0, precision(), den_);
    Series result;
    Series base = *this;
    bool first = true;
    while (k > 0) {
      if (k & 1) {
        result = first ? base : result * base;
        first = false;
      }
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  template <class F>
  auto map_coeffs(F f) const -> Series<decltype(f(std::declval<C>(), std::int64_t{}))> {
    using D = decltype(f(std::declval<C>(), std::int64_t{}));
    std::vector<D> v;
    v.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v.push_back(f(coeffs_[i], order_ + static_cast<std::int64_t>(i)));
    auto s = Series<D>::from_coeffs(order_, std::move(v), den_);
    if (coeffs_.empty()) return Series<D>::zero(end_, den_);
    return s;
  }

  // Same series on the coarsest grid that carries all nonzero coefficients.
  Series compact() const {
    std::int64_t g = den_;
    for (std::size_t i = 0; i < coeffs_.size() && g > 1; ++i)
      if (!hecke::is_zero(coeffs_[i])) g = gcd64(g, order_ + static_cast<std::int64_t>(i));
    if (g <= 1) return *this;
    const std::int64_t new_end = end_ >= 0 ? (end_ + g - 1) / g : -((-end_) / g);
    if (coeffs_.empty()) return zero(new_end, den_ / g);
    std::vector<C> v;
    for (std::int64_t e = order_ / g; e < new_end; ++e) v.push_back(coeff(e * g));
    return from_coeffs(order_ / g, std::move(v), den_ / g);
  }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && hecke::is_zero(coeffs_[lead])) ++lead;
    if (lead) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      order_ += static_cast<std::int64_t>(lead);
    }
    if (coeffs_.empty()) order_ = end_;
  }

  std::int64_t den_ = 1;
  std::int64_t order_ = 0;
  std::int64_t end_ = 0;
  std::vector<C> coeffs_;
};

using QSeries = Series<Rational>;
using CSeries = Series<Cyclotomic>;

// Theta = q d/dq: the coefficient at e/D is scaled by e/D.
template <class C>
Series<C> theta(const Series<C>& f) {
  const std::int64_t den = f.den();
  auto s = f.map_coeffs([den](const C& c, std::int64_t e) { return C(c * C(ratio(e, den))); });
  return s;
}

// Theta f / f.
template <class C>
Series<C> log_derivative(const Series<C>& f) {
  if (f.is_zero()) throw Error(ErrorKind::NonUnitLeading, "log derivative of zero series");
  // Work with f = c q^h u, u = 1 + O(q): Theta f / f = h + Theta u / u.
  return theta(f) * f.inverse();
}

// q -> q^a for a positive rational a = r/s.
template <class C>
Series<C> rescale_exponents(const Series<C>& f, const Rational& a) {
  if (sgn(a) <= 0) throw Error(ErrorKind::UnsupportedParameter, "rescale factor must be positive");
  const std::int64_t r = a.get_num().get_si();
  const std::int64_t s = a.get_den().get_si();
  const std::int64_t sd = s * f.den();
  const std::int64_t g = gcd64(r, sd);
  const std::int64_t step = r / g;
  const std::int64_t new_den = sd / g;
  const std::int64_t new_end = f.end() * step;
  if (f.is_zero()) return Series<C>::zero(new_end, new_den);
  std::vector<C> v(static_cast<std::size_t>(new_end - f.order() * step), C(0));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) v[i * static_cast<std::size_t>(step)] = f.coeffs()[i];
  return Series<C>::from_coeffs(f.order() * step, std::move(v), new_den);
}

// Coefficient at numerator e is multiplied by zeta_n^{j e}.
template <class C>
CSeries twist(const Series<C>& f, std::int64_t j, std::int64_t n) {
  return f.map_coeffs([j, n](const C& c, std::int64_t e) {
    Cyclotomic z = Cyclotomic::zeta_power(n, mod_floor(j, n) * mod_floor(e, n) % n);
    return Cyclotomic(z * Cyclotomic(c));
  });
}

inline CSeries to_cyclotomic(const QSeries& f) {
  return f.map_coeffs([](const Rational& c, std::int64_t) { return Cyclotomic(c); });
}

// Rational series on grid 1, or NotIntegralSeries.
QSeries integral_projection(const QSeries& f);
QSeries integral_projection(const CSeries& f);

}  // namespace hecke
