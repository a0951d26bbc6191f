#include "doctest.h"

#include "hecke/arith.hpp"
#include "hecke/divisor_map.hpp"
#include "hecke/error.hpp"
#include "hecke/forms.hpp"
#include "hecke/hecke_ops.hpp"

using namespace hecke;

TEST_CASE("polynomials in j") {
  QSeries j = j_invariant(20);
  CHECK(weight0_to_j_polynomial(j * j) == std::vector<Rational>{0, 0, 1});
  CHECK(weight0_to_j_polynomial(QSeries::monomial(Rational(2), 0, 10)) == std::vector<Rational>{2});
  CHECK(weight0_to_j_polynomial(j * j * Rational(3) - j + QSeries::monomial(Rational(7), 0, 30)) ==
        std::vector<Rational>{7, -1, 3});
  CHECK_THROWS_AS(weight0_to_j_polynomial(hauptmodul(2, 10)), Error);
  CHECK_THROWS_AS(weight0_to_j_polynomial(delta(10)), Error);
  try {
    weight0_to_j_polynomial(hauptmodul(2, 10));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPolynomialInJ);
  }
}

TEST_CASE("multiplicative image of j - 1728 as a cubic in j") {
  auto img = hecke_multiplicative(parse_form("jminus:1728"), 2, 1, 15);
  std::vector<Rational> p = weight0_to_j_polynomial(img.series);
  REQUIRE(p.size() == 4);
  auto roots = polynomial_roots(p);
  REQUIRE(roots.size() == 2);
  std::map<std::string, int> got;
  for (const auto& r : roots) {
    CHECK(r.rational);
    got[to_string(r.exact)] = r.multiplicity;
  }
  CHECK(got == std::map<std::string, int>{{"1728/1", 1}, {"287496/1", 2}});
}

TEST_CASE("divisor map commutes with Hecke operators at level one") {
  for (const char* key : {"Delta", "jminus:1728", "jminus:0", "E4", "E6", "E4*E6", "jminus:54000"}) {
    FormExpression f = parse_form(key);
    Divisor base = divisor_of_form(f, 1);
    CHECK(level1_series_divisor(expression_qexp(f, 20), f.weight()) == base);
    for (std::int64_t n : {2, 3}) {
      auto img = hecke_multiplicative(f, n, 1, 20);
      Divisor independent = level1_series_divisor(img.series, img.weight);
      Divisor image = hecke_divisor(n, base, 1);
      CHECK_MESSAGE(independent == image, key << " n=" << n << ": " << independent.str() << " vs " << image.str());
      CHECK(independent.degree() == ratio(img.weight, 12));
    }
  }
}

TEST_CASE("generic fibres stay consistent under the Hecke action") {
  FormExpression f = parse_form("jminus:5");
  auto img = hecke_multiplicative(f, 2, 1, 15);
  Divisor independent = level1_series_divisor(img.series, 0);
  Divisor image = hecke_divisor(2, divisor_of_form(f, 1), 1);
  CHECK(independent.numeric().size() == 3);
  CHECK(independent == image);
}

TEST_CASE("Laurent polynomials in the level two Hauptmodul") {
  QSeries t = hauptmodul(2, 40);
  QSeries g = t * Rational(-1) + QSeries::monomial(Rational(286720), 0, 40) + t.inverse() * Rational(2097152);
  LaurentPolynomial lp = weight0_to_hauptmodul(g, 2);
  CHECK(lp.low == -1);
  CHECK(lp.coeffs == std::vector<Rational>{2097152, 286720, -1});

  auto img = hecke_multiplicative(parse_form("haupt:2:512"), 2, 2, 30);
  lp = weight0_to_hauptmodul(img.series, 2);
  CHECK(lp.low == -1);
  CHECK(lp.coeffs == std::vector<Rational>{2097152, 286720, -1});
  Divisor d = hauptmodul_series_divisor(img.series, 2);
  // Zeros where tau/2 or (tau+1)/2 is equivalent to i: tau = 2i and (2i - 1)/5.
  Divisor expect(2);
  expect.add_point({1, 0, 4}, 1);
  expect.add_point({5, 2, 1}, 1);
  expect.add_cusp(infinity_cusp(2), -1);
  expect.add_cusp(cusp_key(0, 1, 2), -1);
  CHECK_MESSAGE(d == expect, d.str() << " vs " << expect.str());
  Divisor t2 = hecke_divisor(2, divisor_of_form(parse_form("haupt:2:512"), 2), 2);
  CHECK(t2.infinity_coefficient() == -2);
  CHECK(d.infinity_coefficient() == -1);
  CHECK(t2 != d);
}

TEST_CASE("level two divisors agree with the Hauptmodul route when p does not divide N") {
  FormExpression f = parse_form("haupt:2:512");
  auto img = hecke_multiplicative(f, 3, 2, 30);
  Divisor independent = hauptmodul_series_divisor(img.series, 2);
  Divisor image = hecke_divisor(3, divisor_of_form(f, 2), 2);
  CHECK_MESSAGE(independent == image, independent.str() << " vs " << image.str());
}
