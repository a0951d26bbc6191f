#include "doctest.h"

#include <random>

#include "hecke/arith.hpp"
#include "hecke/curve.hpp"
#include "hecke/error.hpp"

using namespace hecke;

namespace {

const HeegnerPoint kI{1, 0, 1}, kOmega{1, 1, 1}, k2I{1, 0, 4};

Matrix2 random_gamma0(std::mt19937_64& rng, std::int64_t level) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<std::int64_t> shift(-3, 3);
  Matrix2 g;
  for (int step = 0; step < 6; ++step) {
    std::int64_t k = shift(rng);
    Matrix2 m = pick(rng) % 2 == 0 ? Matrix2{1, k, 0, 1} : Matrix2{1, 0, level * k, 1};
    g = g * m;
  }
  return g;
}

}  // namespace

TEST_CASE("act_matrix on i") {
  CHECK(act_matrix({2, 0, 0, 1}, kI) == HeegnerPoint{1, 0, 4});
  CHECK(act_matrix({1, 1, 0, 2}, kI) == HeegnerPoint{2, -2, 1});
  CHECK(act_matrix({1, 0, 0, 2}, kI) == HeegnerPoint{4, 0, 1});
  // Root check numerically.
  HeegnerPoint w = act_matrix({1, 1, 0, 2}, kI);
  Complex expect = mobius({1, 1, 0, 2}, kI.value());
  CHECK(abs(w.value() - expect) < Real("1e-80"));
}

TEST_CASE("level one reduction") {
  auto r = reduce_level1({4, 0, 1});
  CHECK(r.form == HeegnerPoint{1, 0, 4});
  CHECK(r.witness == Matrix2{0, -1, 1, 0});
  CHECK(reduce_level1({2, -2, 1}).form == kI);
  // omega + 17 is the root of x^2 - 33x + 273.
  CHECK(reduce_level1({1, -33, 273}).form == kOmega);
  // Boundary tie: omega + 1 = root of x^2 - x + 1 goes to omega.
  CHECK(reduce_level1({1, -1, 1}).form == kOmega);
  // |z| = 1 tie picks Re z <= 0.
  CHECK(reduce_level1({2, -1, 2}).form == HeegnerPoint{2, 1, 2});
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    HeegnerPoint z{1 + trial % 5, trial % 3 - 1, 3 + trial % 7};
    auto base = reduce_level1(z);
    CHECK(act_matrix(base.witness, z) == base.form);
    Matrix2 g = random_gamma0(rng, 1);
    CHECK(reduce_level1(act_matrix(g, z)).form == base.form);
  }
}

TEST_CASE("reduce_point at level N is idempotent and invariant") {
  std::mt19937_64 rng(11);
  for (std::int64_t level : {1, 2, 3, 4, 6}) {
    for (int trial = 0; trial < 100; ++trial) {
      HeegnerPoint z = make_point(1 + trial % 4, trial % 5 - 2, 2 + trial % 9);
      CanonicalPoint c = reduce_point(z, level);
      CHECK(in_gamma0(c.witness, level));
      CHECK(c.witness.det() == 1);
      CHECK(act_matrix(c.witness, z) == c.point);
      CHECK(reduce_point(c.point, level).point == c.point);
      Matrix2 g = random_gamma0(rng, level);
      CHECK(reduce_point(act_matrix(g, z), level).point == c.point);
    }
  }
}

TEST_CASE("periods") {
  CHECK(period(kI, 1) == 2);
  CHECK(period(kOmega, 1) == 3);
  CHECK(period(k2I, 1) == 1);
  CHECK(period(kI, 2) == 1);
  CHECK(period({2, -2, 1}, 2) == 2);  // (1 + i)/2
  CHECK(period(kOmega, 3) == 1);
  CHECK(period({3, -3, 1}, 3) == 3);  // (3 + sqrt(-3))/6
  CHECK(period(kOmega, 2) == 1);
}

TEST_CASE("cusps and widths") {
  auto c1 = cusps(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].str() == "inf");
  auto c2 = cusps(2);
  REQUIRE(c2.size() == 2);
  CHECK(c2[1].str() == "0");
  CHECK(c2[1].width == 2);
  auto c4 = cusps(4);
  REQUIRE(c4.size() == 3);
  CHECK(c4[0].width == 1);
  CHECK(c4[1].str() == "0");
  CHECK(c4[1].width == 4);
  CHECK(c4[2].str() == "1/2");
  CHECK(c4[2].width == 1);
  for (std::int64_t level = 1; level <= 30; ++level) {
    std::int64_t total = 0;
    for (const auto& c : cusps(level)) total += c.width;
    CHECK(total == gamma0_index(level));
  }
  CHECK(cusps(9).size() == 4);
  CHECK(cusps(25).size() == 6);
  CHECK(cusp_key(1, 4, 4) == infinity_cusp(4));
  CHECK(cusp_key(5, 1, 4) == cusp_key(0, 1, 4));
  CHECK(cusp_key(3, 2, 4) == cusp_key(1, 2, 4));
}

TEST_CASE("Hecke action on divisors") {
  Divisor d(1);
  d.add_point(kI, 1);
  d.add_cusp(infinity_cusp(1), -1);
  Divisor t2 = hecke_divisor(2, d, 1);
  Divisor expect(1);
  expect.add_point(k2I, 2);
  expect.add_point(kI, 1);
  expect.add_cusp(infinity_cusp(1), -3);
  CHECK(t2 == expect);
  CHECK(t2.str() == "[1,0,1] + 2[1,0,4] - 3[inf]");

  Divisor d2(2);
  d2.add_point(kI, 1);
  d2.add_cusp(infinity_cusp(2), -1);
  Divisor l2 = hecke_divisor(2, d2, 2);
  Divisor expect2(2);
  expect2.add_point({4, 0, 1}, 1);
  expect2.add_point({2, -2, 1}, 1);
  expect2.add_cusp(infinity_cusp(2), -2);
  CHECK(l2 == expect2);
  CHECK(l2.coefficient({4, 0, 1}) == 1);
  CHECK(l2.coefficient({1, 0, 4}) == 0);  // 2i and i/2 are distinct at level 2

  // T(q, q) acts as the identity.
  CHECK(hecke_divisor(AlgebraElement::basis(2, 3, 3), d2) == d2);
}

TEST_CASE("divisor degree scales and module law holds") {
  Divisor d(1);
  d.add_point(kOmega, Rational(1, 3));
  d.add_point({1, 0, 5}, 2);
  d.add_cusp(infinity_cusp(1), -1);
  for (std::int64_t n : {2, 3, 4, 6}) {
    auto reps = left_coset_reps(1, n);
    CHECK(hecke_divisor(n, d, 1).degree() == d.degree() * Rational(static_cast<long>(reps.size())));
  }
  for (std::int64_t m : {2, 3})
    for (std::int64_t n : {2, 3}) {
      Divisor lhs = hecke_divisor(m, hecke_divisor(n, d, 1), 1);
      Divisor rhs = hecke_divisor(algebra_multiply(t_n(m, 1), t_n(n, 1)), d);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("atom divisors and valence") {
  Divisor e4 = expression_divisor(parse_form("E4"));
  CHECK(e4.coefficient(kOmega) == Rational(1, 3));
  CHECK(e4.degree() == Rational(1, 3));
  CHECK(expression_divisor(parse_form("E6")).coefficient(kI) == Rational(1, 2));
  Divisor dd = expression_divisor(parse_form("Delta"));
  CHECK(dd.infinity_coefficient() == 1);
  CHECK(dd.degree() == 1);
  Divisor jm = expression_divisor(parse_form("jminus:1728"));
  CHECK(jm.coefficient(kI) == 1);
  CHECK(jm.infinity_coefficient() == -1);
  CHECK(expression_divisor(parse_form("jminus:287496")).coefficient(k2I) == 1);
  Divisor generic = expression_divisor(parse_form("jminus:5"));
  CHECK(generic.fibers().size() == 1);
  CHECK(generic.degree() == 0);

  for (const char* key : {"E4", "E6", "E8", "E10", "E14", "Delta", "E4*E6^2", "Delta^-1*E4^3"}) {
    FormExpression f = parse_form(key);
    for (std::int64_t level : {1, 2, 3, 4, 5, 6, 12}) {
      Divisor d = divisor_of_form(f, level);
      CHECK_MESSAGE(d.degree() == ratio(f.weight() * gamma0_index(level), 12), key << " at " << level);
    }
  }
  CHECK_THROWS_AS(expression_divisor(parse_form("E12")), Error);

  Divisor j21 = expression_divisor(parse_form("haupt:2:512"));
  Divisor expect(2);
  expect.add_point(kI, 1);
  expect.add_cusp(infinity_cusp(2), -1);
  CHECK(j21 == expect);
  Divisor t2 = expression_divisor(parse_form("haupt:2"));
  CHECK(t2.infinity_coefficient() == -1);
  CHECK(t2.cusp_coefficient(cusp_key(0, 1, 2)) == 1);
  // t_4 takes the value -16 at the cusp 1/2.
  Divisor t4 = expression_divisor(parse_form("haupt:4:-16"));
  CHECK(t4.cusp_coefficient(cusp_key(1, 2, 4)) == 1);
  for (const char* key : {"eta:4:1^8,4^-8", "eta:6:1^2,2^2,3^2,6^2", "Delta:2", "Delta:3*Delta^-1"}) {
    FormExpression f = parse_form(key);
    Divisor d = expression_divisor(f);
    CHECK(d.degree() == ratio(f.weight() * gamma0_index(f.level()), 12));
    CHECK(d.infinity_coefficient() == f.order());
  }
}

TEST_CASE("lifting level one divisors") {
  Divisor e4 = divisor_of_form(parse_form("E4"), 2);
  // omega is not elliptic for Gamma_0(2): its fibre is one point of order one.
  CHECK(e4.coefficient(kOmega) == 1);
  Divisor e6 = divisor_of_form(parse_form("E6"), 2);
  CHECK(e6.coefficient(kI) == 1);
  CHECK(e6.coefficient({2, -2, 1}) == Rational(1, 2));
  Divisor d = divisor_of_form(parse_form("Delta"), 4);
  CHECK(d.infinity_coefficient() == 1);
  CHECK(d.cusp_coefficient(cusp_key(0, 1, 4)) == 4);
  CHECK(d.cusp_coefficient(cusp_key(1, 2, 4)) == 1);
}

TEST_CASE("numeric fibres resolve to points") {
  Divisor d(1);
  d.add_fiber({1, Rational(5)}, 1);
  Divisor r = resolve_fibers(d);
  REQUIRE(r.numeric().size() == 1);
  CHECK(abs(j_value(r.numeric()[0].tau) - Complex(Real(5))) < Real("1e-40"));
  Divisor t = hecke_divisor(2, d, 1);
  CHECK(t.numeric().size() == 3);
  CHECK(t.degree() == 3);
  Divisor cm(1);
  cm.add_numeric(to_complex(Real(0), Real(3)), 1);
  CHECK(cm.coefficient({1, 0, 9}) == 1);
}
