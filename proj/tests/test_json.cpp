#include "doctest.h"

#include "hecke/error.hpp"
#include "hecke/hecke_ops.hpp"
#include "hecke/json_io.hpp"

using namespace hecke;

TEST_CASE("series JSON round trip") {
  const QSeries e4 = eisenstein(4, 6);
  Json j = to_json(e4);
  CHECK(j["D"] == 1);
  CHECK(j["order"] == 0);
  CHECK(j["precision"] == 6);
  CHECK(j["coeffs"][1] == "240/1");
  CHECK(qseries_from_json(Json::parse(j.dump())) == e4);

  auto img = hecke_multiplicative(parse_form("E4"), 2, 1, 10);
  CHECK(qseries_from_json(to_json(img.series)) == img.series);
  const QSeries half = rescale_exponents(hauptmodul(2, 8), ratio(1, 2));
  CHECK(qseries_from_json(to_json(half)) == half);
  const QSeries zero = QSeries::zero(5, 2);
  CHECK(qseries_from_json(to_json(zero)) == zero);

  const CSeries tw = twist(half, 1, 2);
  CHECK(cseries_from_json(Json::parse(to_json(tw).dump())) == tw);

  Json bad = j;
  bad["precision"] = 3;
  CHECK_THROWS_AS(qseries_from_json(bad), Error);
  CHECK_THROWS_AS(qseries_from_json(Json::parse("{\"D\": 1}")), Error);
}

TEST_CASE("algebra element JSON") {
  AlgebraElement u = algebra_multiply(t_n(2, 1), t_n(2, 1));
  Json j = to_json(u);
  CHECK(j.dump() == R"({"N":1,"terms":[{"a":1,"d":4,"mult":1},{"a":2,"d":2,"mult":3}]})");
  CHECK(algebra_from_json(j) == u);
}

TEST_CASE("form JSON") {
  for (const char* key : {"E4", "Delta:2", "jminus:1728", "eta:4:1^8,4^-8", "haupt:2:512", "E4^3*E6^-1*j"}) {
    FormExpression f = parse_form(key);
    Json j = to_json(f);
    FormExpression g = form_from_json(Json::parse(j.dump()));
    CHECK(to_json(g) == j);
    CHECK(expression_qexp(g, 8) == expression_qexp(f, 8));
  }
  FormExpression op = hecke_multiplicative(parse_form("E4"), 2, 1, 8).as_expression();
  CHECK(to_json(form_from_json(to_json(op))) == to_json(op));
}

TEST_CASE("divisor JSON") {
  Divisor d(2);
  d.add_point({1, 0, 4}, ratio(1, 2));
  d.add_point({5, 2, 1}, 1);
  d.add_cusp(infinity_cusp(2), -1);
  d.add_cusp(cusp_key(0, 1, 2), -1);
  d.add_fiber({2, Rational(7)}, 2);
  Json j = to_json(d);
  CHECK(j["N"] == 2);
  CHECK(j["cusps"].size() == 2);
  CHECK(divisor_from_json(Json::parse(j.dump())) == d);

  Divisor n = resolve_fibers(divisor_of_form(parse_form("jminus:5"), 1));
  REQUIRE(n.numeric().size() == 1);
  Divisor back = divisor_from_json(Json::parse(to_json(n).dump()));
  CHECK(back == n);
  CHECK(abs(back.numeric()[0].tau - n.numeric()[0].tau) < Real(1e-90));
}

TEST_CASE("complex values and reports") {
  Complex z(Real(1) / 3, -sqrt(Real(2)));
  CHECK(complex_from_json(to_json(z)) == z);
  EvalReport r{"bko", "n=1", true, "-240/1", "-240/1", "exact", ""};
  EvalReport s = report_from_json(to_json(r));
  CHECK(to_json(s) == to_json(r));
  EvalParams p;
  p.C = 17;
  p.s = 1.25;
  CHECK(to_json(params_from_json(to_json(p))) == to_json(p));
}
