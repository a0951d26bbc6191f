#include "doctest.h"

#include "hecke/arith.hpp"
#include "hecke/divisor_map.hpp"
#include "hecke/divisor_sums.hpp"
#include "hecke/error.hpp"
#include "hecke/hecke_ops.hpp"

using namespace hecke;

namespace {

double dist(const Complex& a, const Complex& b) { return static_cast<double>(abs(a - b)); }
Complex rc(long x) { return Complex(Real(x)); }

Divisor point_minus_infinity(const HeegnerPoint& z) {
  Divisor d(1);
  d.add_point(z, 1);
  d.add_cusp(infinity_cusp(1), -1);
  return d;
}

}  // namespace

TEST_CASE("pairing examples") {
  PairingResult e4 = pair(jn_evaluator(1), divisor_of_form(parse_form("E4"), 1));
  CHECK(dist(e4.value, rc(-240)) < 1e-20);
  CHECK(e4.breakdown.size() == 1);
  CHECK(e4.breakdown[0].coeff == ratio(1, 3));

  PairingResult i = pair(jn_evaluator(1), point_minus_infinity({1, 0, 1}));
  CHECK(dist(i.value, rc(984)) < 1e-20);
  CHECK(r_at_s1(1, 1, parse_form("jminus:1728")) == 984);

  Divisor d = point_minus_infinity({1, 0, 4}) * Rational(3) + divisor_of_form(parse_form("E6"), 1);
  PairingResult one = pair(constant_evaluator(1, Rational(1)), d);
  CHECK(one.exact);
  CHECK(one.exact_value == d.degree());
}

TEST_CASE("pairing is linear and keeps its breakdown") {
  const PointEvaluator f = jn_evaluator(2);
  Divisor a = divisor_of_form(parse_form("E4"), 1), b = point_minus_infinity({1, 0, 4});
  PairingResult pa = pair(f, a), pb = pair(f, b), pab = pair(f, a + b);
  CHECK(dist(pab.value, pa.value + pb.value) < 1e-25);
  Complex sum(Real(0));
  for (const Contribution& c : pab.breakdown) sum += Complex(rational_to_real(c.coeff)) * c.value;
  CHECK(dist(sum, pab.value) < 1e-30);
}

TEST_CASE("missing cusp values are refused") {
  EvalParams p;
  PointEvaluator f = niebur_evaluator(1, 1, p);
  CHECK_THROWS_AS(pair(f, point_minus_infinity({1, 0, 1})), Error);
  try {
    r_numeric(1, 1, parse_form("Delta"), p);
    FAIL("expected MissingCuspValue");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingCuspValue);
  }
}

TEST_CASE("BKO pairing against the log derivative") {
  CHECK(r_at_s1(1, 1, parse_form("E4")) == -240);
  CHECK(r_at_s1(1, 2, parse_form("E4")) == 53280);
  CHECK(r_at_s1(1, 1, parse_form("Delta")) == 24);
  CHECK(dist(bko_pairing(1, parse_form("Delta")).value, rc(24)) < 1e-30);
  for (const char* key : {"E4", "E6", "jminus:1728"})
    for (std::int64_t n : {1, 2, 3}) {
      CAPTURE(key);
      CAPTURE(n);
      const FormExpression f = parse_form(key);
      const Rational exact = r_at_s1(1, n, f);
      CHECK(dist(bko_pairing(n, f, 50).value, Complex(rational_to_real(exact))) < 1e-20);
    }
}

TEST_CASE("exact equivariance at level one") {
  EvalReport r = verify_equivariance(2, 1, parse_form("E4"), 1);
  CHECK(r.passed);
  CHECK(r.lhs == "-53280/1");
  r = verify_equivariance(3, 1, parse_form("E4"), 1);
  CHECK(r.passed);
  CHECK(r.lhs == "12288960/1");
  for (const char* key : {"E4", "E6", "Delta", "jminus:1728"})
    for (std::int64_t p : {2, 3, 5})
      for (std::int64_t m : {1, 2, 3}) {
        EvalReport rep = verify_equivariance(p, m, parse_form(key), 1);
        CHECK_MESSAGE(rep.passed, rep.label << ": " << rep.lhs << " vs " << rep.rhs);
      }
  CHECK_THROWS_AS(verify_equivariance(2, 1, parse_form("E4"), 2), Error);
}

TEST_CASE("exact equivariance for eta quotients at level three") {
  for (const char* key : {"eta:3:1^6,3^6", "haupt:3:5", "eta:3:1^9,3^-3"})
    for (std::int64_t p : {2, 5})
      for (std::int64_t m : {1, 2, 3}) {
        EvalReport rep = verify_equivariance(p, m, parse_form(key), 3);
        CHECK_MESSAGE(rep.passed, key << " " << rep.label << ": " << rep.lhs << " vs " << rep.rhs);
      }
}

TEST_CASE("divisor sums commute with the Hecke action") {
  Divisor i(1);
  i.add_point({1, 0, 1}, 1);
  EvalReport r = verify_prop_divisor_sums(2, jn_evaluator(1), i, 1e-25);
  CHECK_MESSAGE(r.passed, r.lhs << " vs " << r.rhs);
  const Complex direct = jn_value(1, HeegnerPoint{1, 0, 4}) + jn_value(1, Complex(Real(0), Real(0.5))) +
                         jn_value(1, Complex(Real(0.5), Real(0.5)));
  CHECK(dist(pair(jn_evaluator(1), hecke_divisor(2, i, 1)).value, direct) < 1e-25);

  Divisor d = point_minus_infinity({1, 1, 1}) + point_minus_infinity({2, 1, 3}) * Rational(2);
  for (std::int64_t n : {2, 3, 4}) {
    EvalReport c = verify_prop_divisor_sums(n, constant_evaluator(1, Rational(1)), d, 0);
    CHECK(c.passed);
    CHECK(c.lhs == to_string(Rational(divisor_sigma(1, n)) * d.degree()));
  }
  r = verify_prop_divisor_sums(2, jn_evaluator(2), divisor_of_form(parse_form("E4"), 1), 1e-20);
  CHECK(r.passed);
  r = verify_prop_divisor_sums(3, jn_evaluator(1), point_minus_infinity({1, 0, 1}), 1e-20);
  CHECK(r.passed);
  Divisor level2(2);
  level2.add_point({1, 1, 1}, 1);
  level2.add_point({2, 2, 1}, 1);
  r = verify_prop_divisor_sums(3, constant_evaluator(2, Rational(5)), level2, 0);
  CHECK(r.passed);
}

TEST_CASE("Rohrlich sums for real s") {
  EvalParams p;
  p.C = 100;
  const Real sq3 = sqrt(Real(3));
  const Complex omega(Real(-0.5), sq3 / 2);
  PairingResult r = r_numeric(1, 1, parse_form("E4"), p);
  CHECK(dist(r.value, niebur_value(1, 1, omega, p).value / rc(3)) < 1e-20);
  CHECK(r.error < 1e-3);
  p.s = 2;
  PairingResult e = r_numeric(1, 0, parse_form("E4"), p);
  CHECK(dist(e.value, niebur_value(1, 0, omega, p).value / rc(3)) < 1e-20);
}

TEST_CASE("Rohrlich sums see the Hecke image of the form") {
  // R_{1,1}(s; E4|*T(2)) = R_{1,2}(s; E4): the image divisor is read off its q-expansion.
  EvalParams p;
  p.C = 300;
  const auto img = hecke_multiplicative(parse_form("E4"), 2, 1, 20);
  const Divisor image = level1_series_divisor(img.series, img.weight);
  CHECK(!image.has_cusp_support());
  PairingResult lhs = r_numeric(1, image, p);
  PairingResult rhs = r_numeric(1, 2, parse_form("E4"), p);
  CHECK(dist(lhs.value, rhs.value) < lhs.error + rhs.error + 1e-12);
  CHECK(lhs.error + rhs.error < 1e-3);

  // Same identity for a form whose image divisor has non-CM points.
  const FormExpression f = parse_form("E4^3*jminus:5*Delta");
  const auto img2 = hecke_multiplicative(f, 2, 1, 30);
  Divisor image2 = level1_series_divisor(img2.series, img2.weight);
  Divisor base = divisor_of_form(f, 1);
  CHECK(!base.has_cusp_support());
  CHECK(!image2.numeric().empty());
  lhs = r_numeric(1, image2, p);
  rhs = r_numeric(2, base, p);
  CHECK(dist(lhs.value, rhs.value) < lhs.error + rhs.error + 1e-12);
}
