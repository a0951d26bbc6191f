#include <random>

#include "doctest.h"
#include "hecke/forms.hpp"
#include "hecke/series.hpp"
#include "oracles.hpp"

using namespace hecke;

namespace {

QSeries poly(std::int64_t order, std::vector<long> c, std::int64_t den = 1) {
  std::vector<Rational> v(c.begin(), c.end());
  return QSeries::from_coeffs(order, v, den);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("-36882000/691")) == "-36882000/691");
  CHECK(to_string(parse_rational("\xE2\x88\x92" "4/2")) == "-2/1");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(12) == ratio(-691, 2730));
}

TEST_CASE("cyclotomic arithmetic") {
  CHECK(cyclotomic_polynomial(6) == std::vector<BigInt>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
  auto z3 = Cyclotomic::zeta_power(3, 1);
  CHECK(z3 * z3 * z3 == Cyclotomic(1));
  CHECK(Cyclotomic(1) + z3 + z3 * z3 == Cyclotomic(0));
  CHECK(Cyclotomic::zeta_power(2, 1) == Cyclotomic(-1));
  // zeta_6^2 = zeta_3 after lifting
  CHECK(Cyclotomic::zeta_power(6, 2) == z3);
  auto x = Cyclotomic::from_coefficients(5, {Rational(2), Rational(-1), Rational(3, 7), Rational(0)});
  CHECK(x * x.inverse() == Cyclotomic(1));
  // i * zeta_3 lives in Q(zeta_12); its 12th power is 1.
  auto w = Cyclotomic::zeta_power(4, 1) * z3;
  CHECK(w.order() == 12);
  Cyclotomic p(1);
  for (int i = 0; i < 12; ++i) p *= w;
  CHECK(p == Cyclotomic(1));
}

TEST_CASE("series arithmetic") {
  auto a = poly(0, {1, 1, 0, 0, 0});
  auto b = poly(0, {1, -1, 0, 0, 0});
  auto p = a * b;
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == -1);
  CHECK(p.end() == 5);

  auto g = QSeries::monomial(Rational(1), 0, 4) - QSeries::monomial(Rational(1), 1, 4);
  auto inv = g.inverse();
  for (int i = 0; i < 4; ++i) CHECK(inv.coeff(i) == 1);
  CHECK_THROWS_AS(inv.coeff(4), Error);

  auto d = delta(20);
  auto one = d / d;
  CHECK(one.order() == 0);
  CHECK(one.precision() == d.precision());
  CHECK(one.coeff(0) == 1);
  for (int i = 1; i < one.end(); ++i) CHECK(one.coeff(i) == 0);

  CHECK_THROWS_AS(d / QSeries::zero(10), Error);
  auto h = d.pow(-2) * d.pow(3);
  CHECK(h.order() == 1);
  for (int i = 1; i < h.end(); ++i) CHECK(h.coeff(i) == d.coeff(i));
}

TEST_CASE("division then multiplication recovers the dividend") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long> ca(12), cb(12);
    for (auto& x : ca) x = dist(rng);
    for (auto& x : cb) x = dist(rng);
    cb[0] = dist(rng) | 1;
    auto a = poly(-2, ca), b = poly(1, cb);
    auto back = (a / b) * b;
    for (auto e = back.order(); e < back.end(); ++e) CHECK(back.coeff(e) == a.coeff(e));
  }
}

TEST_CASE("theta and log derivative") {
  CHECK(theta(QSeries::monomial(Rational(1), 5, 10)).coeff(5) == 5);
  CHECK(theta(QSeries::monomial(Rational(7), 0, 10)).is_zero());
  auto e4 = eisenstein(4, 10);
  auto t = theta(e4);
  CHECK(t.coeff(1) == 240);
  CHECK(t.coeff(2) == 4320);
  auto ld = log_derivative(e4);
  CHECK(ld.coeff(0) == 0);
  CHECK(ld.coeff(1) == 240);
  CHECK(ld.coeff(2) == -53280);
  CHECK(ld.coeff(3) == 12288960);
  auto lq = log_derivative(QSeries::monomial(Rational(1), -1, 5));
  CHECK(lq.coeff(0) == -1);
  // Theta Delta / Delta = 1 - 24 sum sigma_1(n) q^n
  auto ldd = log_derivative(delta(30));
  CHECK(ldd.coeff(0) == 1);
  for (int n = 1; n < ldd.end(); ++n) CHECK(ldd.coeff(n) == Rational(-24 * oracle::sigma(1, n)));
}

TEST_CASE("theta derivation law and log derivative additivity") {
  auto f = eisenstein(6, 15), g = j_invariant(15);
  auto lhs = theta(f * g), rhs = theta(f) * g + f * theta(g);
  for (auto e = lhs.order(); e < std::min(lhs.end(), rhs.end()); ++e) CHECK(lhs.coeff(e) == rhs.coeff(e));
  auto l1 = log_derivative(f * g), l2 = log_derivative(f) + log_derivative(g);
  for (auto e = 0; e < std::min(l1.end(), l2.end()); ++e) CHECK(l1.coeff(e) == l2.coeff(e));
}

TEST_CASE("rescale and twist") {
  auto f = QSeries::monomial(Rational(1), -1, 5) + QSeries::monomial(Rational(24), 0, 5);
  auto g = rescale_exponents(f, Rational(2));
  CHECK(g.den() == 1);
  CHECK(g.coeff(-2) == 1);
  CHECK(g.coeff(-1) == 0);
  CHECK(g.coeff(0) == 24);

  auto dh = rescale_exponents(delta(10), Rational(1, 2));
  CHECK(dh.den() == 2);
  CHECK(dh.order() == 1);
  CHECK(dh.coeff(2) == -24);

  auto j3 = rescale_exponents(j_invariant(5), Rational(3));
  CHECK(j3.coeff(-3) == 1);
  CHECK(j3.coeff(0) == 744);
  CHECK(j3.coeff(3) == 196884);
  CHECK(j3.coeff(1) == 0);

  auto tq = twist(QSeries::monomial(Rational(1), 1, 4), 1, 2);
  CHECK(tq.coeff(1) == Cyclotomic(-1));
  auto th = twist(QSeries::monomial(Rational(1), 1, 4, 2), 1, 2);
  CHECK(th.coeff(1) == Cyclotomic(-1));

  auto e6 = eisenstein(6, 12);
  auto id = twist(e6, 0, 5);
  for (int i = 0; i < 12; ++i) CHECK(id.coeff(i) == Cyclotomic(e6.coeff(i)));
  // Applying twist(., 1, n) n times multiplies by zeta^{n e} = 1.
  CSeries t = to_cyclotomic(e6);
  for (int i = 0; i < 5; ++i) t = twist(t, 1, 5);
  for (int i = 0; i < 12; ++i) CHECK(t.coeff(i) == Cyclotomic(e6.coeff(i)));
}

TEST_CASE("integral projection") {
  auto f = QSeries::from_coeffs(0, {Rational(1), Rational(0), Rational(5), Rational(0)}, 2);
  auto p = integral_projection(f);
  CHECK(p.den() == 1);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 5);
  CHECK_THROWS_AS(integral_projection(QSeries::monomial(Rational(1), 1, 4, 2)), Error);

  auto d = rescale_exponents(delta(12), Rational(1, 2));
  auto prod = twist(d, 0, 2) * twist(d, 1, 2);
  auto r = integral_projection(prod);
  CHECK(r.order() == 1);
}

TEST_CASE("Galois orbit products of random rational series are integral") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (std::int64_t n : {2, 3, 4, 5, 6}) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<long> c(10);
      for (auto& x : c) x = dist(rng);
      c[0] = 1 + std::abs(dist(rng));
      auto f = rescale_exponents(poly(0, c), Rational(1) / Rational(n));
      CSeries acc = twist(f, 0, n);
      for (std::int64_t j = 1; j < n; ++j) acc = acc * twist(f, j, n);
      CHECK_NOTHROW(integral_projection(acc));
    }
  }
}
