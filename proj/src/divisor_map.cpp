#include "hecke/divisor_map.hpp"

#include "hecke/error.hpp"
#include "hecke/forms.hpp"
#include "hecke/numeric.hpp"

namespace hecke {

namespace {

using std::int64_t;

// Greedy removal of the polar part and constant of f against powers of t (order -1).
// Returns the coefficients of t^m, ..., t^0 (index = power) and leaves the remainder in f.
std::vector<Rational> strip_polar_part(QSeries& f, const QSeries& t) {
  if (f.den() != 1) throw Error(ErrorKind::NotPolynomialInJ, "exponents are not integral");
  if (f.end() < 1) throw Error(ErrorKind::NotPolynomialInJ, "constant term is not known");
  const int64_t m = f.order() < 0 ? -f.order() : 0;
  std::vector<Rational> poly(static_cast<std::size_t>(m + 1), Rational(0));
  std::vector<QSeries> powers{QSeries::monomial(Rational(1), 0, f.end() + m)};
  for (int64_t k = 1; k <= m; ++k) powers.push_back(powers.back() * t);
  for (int64_t k = m; k >= 0; --k) {
    Rational c = f.coeff(-k);
    poly[static_cast<std::size_t>(k)] = c;
    if (c != 0) f = f - powers[static_cast<std::size_t>(k)] * c;
  }
  return poly;
}

Divisor roots_divisor(const std::vector<Rational>& poly, int64_t level) {
  Divisor d(level);
  for (const PolynomialRoot& r : polynomial_roots(poly)) {
    Divisor p = r.rational ? fiber_point(level, r.value, &r.exact) : fiber_point(level, r.value);
    d = d + p * Rational(r.multiplicity);
  }
  return d;
}

}  // namespace

std::vector<Rational> weight0_to_j_polynomial(const QSeries& f) {
  if (f.is_zero()) return {};
  QSeries r = f;
  const int64_t m = f.order() < 0 ? -f.order() : 0;
  std::vector<Rational> poly = strip_polar_part(r, j_invariant(f.end() + m));
  if (!r.is_zero())
    throw Error(ErrorKind::NotPolynomialInJ,
                "remainder starts at q^" + std::to_string(r.order()) + " after removing the polynomial part");
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  return poly;
}

LaurentPolynomial weight0_to_hauptmodul(const QSeries& f, int64_t level) {
  if (f.is_zero()) return {};
  QSeries r = f;
  const int64_t m = f.order() < 0 ? -f.order() : 0;
  const QSeries t = hauptmodul(level, f.end() + m + 2);
  std::vector<Rational> positive = strip_polar_part(r, t);
  // What is left vanishes at infinity and must be a polynomial in 1/t = q + O(q^2).
  const QSeries s = t.inverse();
  std::vector<Rational> negative{Rational(0)};
  QSeries power = QSeries::monomial(Rational(1), 0, f.end());
  int64_t k = 0;
  while (!r.is_zero()) {
    while (k < r.order()) {
      power = power * s;
      ++k;
      negative.push_back(0);
    }
    const Rational c = r.leading();
    negative[static_cast<std::size_t>(k)] = c;
    r = r - power * c;
  }
  const int64_t a = static_cast<int64_t>(negative.size()) - 1;
  if (2 * a > f.end() - 1)
    throw Error(ErrorKind::NotPolynomialInJ,
                "not determined as a Laurent polynomial in the Hauptmodul at this precision");
  LaurentPolynomial out;
  out.low = -a;
  for (int64_t i = a; i >= 1; --i) out.coeffs.push_back(negative[static_cast<std::size_t>(i)]);
  for (const Rational& c : positive) out.coeffs.push_back(c);
  std::size_t first = 0;
  while (first < out.coeffs.size() && out.coeffs[first] == 0) ++first;
  out.coeffs.erase(out.coeffs.begin(), out.coeffs.begin() + static_cast<std::ptrdiff_t>(first));
  out.low += static_cast<int64_t>(first);
  while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

Divisor level1_series_divisor(const QSeries& f, int weight) {
  if (weight % 2 != 0) throw Error(ErrorKind::UnsupportedWeightParity, "level one needs even weight");
  if (f.is_zero()) throw Error(ErrorKind::NotPolynomialInJ, "zero has no divisor");
  // G = f E4^{2a} E6^b Delta^{t-a-b} has weight k + 12t - 4a - 6b = 0 and no poles in H.
  const int64_t b = weight % 4 == 0 ? 0 : 1;
  int64_t t = 0;
  while (weight + 12 * t - 6 * b < 0) ++t;
  const int64_t a = (weight + 12 * t - 6 * b) / 4;
  const int64_t rel = f.precision();
  QSeries g = f * eisenstein(4, rel).pow(2 * a) * eisenstein(6, rel).pow(b) * delta(rel + 1).pow(t - a - b);
  std::vector<Rational> poly = weight0_to_j_polynomial(g);
  if (poly.empty()) throw Error(ErrorKind::NotPolynomialInJ, "series vanishes through its precision");
  Divisor d = roots_divisor(poly, 1);
  const P1Label inf = infinity_cusp(1);
  d.add_cusp(inf, Rational(-static_cast<long>(poly.size() - 1)));
  d.add_point(HeegnerPoint{1, 1, 1}, ratio(-2 * a, 3));
  d.add_point(HeegnerPoint{1, 0, 1}, ratio(-b, 2));
  d.add_cusp(inf, Rational(-(t - a - b)));
  return d;
}

Divisor hauptmodul_series_divisor(const QSeries& f, int64_t level) {
  if (level == 1) return level1_series_divisor(f, 0);
  LaurentPolynomial lp = weight0_to_hauptmodul(f, level);
  if (lp.coeffs.empty()) throw Error(ErrorKind::NotPolynomialInJ, "series vanishes through its precision");
  Divisor d = roots_divisor(lp.coeffs, level);
  const int64_t high = lp.low + static_cast<int64_t>(lp.coeffs.size()) - 1;
  d.add_cusp(infinity_cusp(level), Rational(-high));
  Divisor tdiv = eta_quotient_divisor(hauptmodul_spec(level), level);
  for (const auto& [key, c] : tdiv.cusp_part())
    if (c > 0) d.add_cusp(key, Rational(lp.low) * c);
  return d;
}

}  // namespace hecke
