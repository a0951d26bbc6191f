#include "doctest.h"
#include "hecke/hecke_ops.hpp"
#include "oracles.hpp"

using namespace hecke;

namespace {

void check_equal(const QSeries& a, const QSeries& b, std::int64_t from, std::int64_t to) {
  for (auto n = from; n < to; ++n) {
    INFO("exponent " << n);
    CHECK(a.coeff(n) == b.coeff(n));
  }
}

// Direct transcription of the coefficient formula with explicit loops.
Rational brute_hecke(const QSeries& f, int k, std::int64_t n, std::int64_t m) {
  Rational acc = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d || (m != 0 && m % d)) continue;
    Rational dk = 1;
    for (int i = 0; i < k - 1; ++i) dk *= d;
    if (k == 0) dk = Rational(1, 1) / Rational(d);
    acc += dk * f.coeff(m * n / (d * d));
  }
  Rational scale = 1;
  if (k == 0) scale = n;
  for (int i = 0; i < k / 2 - 1; ++i) scale /= n;
  return scale * acc;
}

}  // namespace

TEST_CASE("additive Hecke formula") {
  auto j = j_paper(40);
  auto t2 = hecke_additive_formula(j, 0, 2);
  CHECK(t2.coeff(-2) == 1);
  CHECK(t2.coeff(-1) == 0);
  CHECK(t2.coeff(0) == 72);
  CHECK(t2.end() == 20);
  for (std::int64_t n = 2; n <= 5; ++n) {
    auto t = hecke_additive_formula(j, 0, n);
    for (auto m = t.order(); m < t.end(); ++m) CHECK(t.coeff(m) == brute_hecke(j, 0, n, m));
  }
  auto d = delta(30);
  auto td = hecke_additive_formula(d, 12, 2);
  for (auto m = 1; m < td.end(); ++m) CHECK(td.coeff(m) == Rational(-3, 4) * d.coeff(m));
  auto tdc = hecke_additive_formula(d, 12, 2, AdditiveNormalization::Classical);
  CHECK(tdc.coeff(1) == -24);
  auto c = hecke_additive_formula(QSeries::monomial(Rational(1), 0, 10), 0, 5);
  CHECK(c.coeff(0) == 6);
  CHECK_THROWS_AS(hecke_additive_formula(d, 11, 2), Error);
}

TEST_CASE("coset form agrees with the coefficient formula") {
  auto j = j_paper(60);
  for (std::int64_t n = 2; n <= 6; ++n) {
    auto a = hecke_additive_formula(j, 0, n), b = hecke_additive_cosets(j, 0, n, 1);
    check_equal(a, b, -n, std::min(a.end(), b.end()));
  }
  auto e4 = eisenstein(4, 40);
  for (std::int64_t n = 2; n <= 4; ++n) {
    auto a = hecke_additive_formula(e4, 4, n), b = hecke_additive_cosets(e4, 4, n, 1);
    check_equal(a, b, 0, std::min(a.end(), b.end()));
  }
  auto id = hecke_additive_cosets(e4, 4, 1, 1);
  check_equal(id, e4, 0, 40);
}

TEST_CASE("j_{2,1} under the level-2 operator") {
  // p | N: J_{2,1}|T(2) = J_{2,2} - J_{1,1}(2 tau); no q^{-2} term survives.
  auto j21 = eta_quotient_qexp(hauptmodul_spec(2), 60);
  auto t = hecke_additive_cosets(j21, 0, 2, 2);
  CHECK(t.coeff(-2) == 0);
  CHECK(t.coeff(-1) == 0);
  // Two representatives (1 b; 0 2) in weight 0: sum_b f((tau+b)/2) = 2 sum c(2m) q^m.
  for (auto m = 0; m < t.end(); ++m) CHECK(t.coeff(m) == 2 * j21.coeff(2 * m));
}

TEST_CASE("multiplicative Hecke images of E4") {
  const std::int64_t P = 30;
  auto e4 = parse_form("E4");
  auto t2 = hecke_multiplicative(e4, 2, 1, P);
  CHECK(t2.weight == 12);
  auto rhs2 = eisenstein(12, P) - delta(P) * ratio(36882000, 691);
  check_equal(t2.series, rhs2, 0, P);
  CHECK(t2.series.end() == P);

  auto t3 = hecke_multiplicative(e4, 3, 1, P);
  CHECK(t3.weight == 16);
  auto rhs3 = eisenstein(16, P) + eisenstein(4, P) * delta(P) * ratio(BigInt("44449152000"), 3617);
  check_equal(t3.series, rhs3, 0, P);

  auto w = hecke_multiplicative(e4, 2, 1, 10, SlashConvention::Weighted);
  check_equal(w.series, t2.series * Rational(1, 4), 0, 10);

  auto ld2 = log_derivative(t2.series);
  CHECK(ld2.coeff(1) == -53280);
  auto ld3 = log_derivative(t3.series);
  CHECK(ld3.coeff(1) == 12288960);
}

TEST_CASE("level 2 example with j_{2,1} - 512") {
  auto f = parse_form("haupt:2:512");
  auto img = hecke_multiplicative(f, 2, 2, 30);
  CHECK(img.weight == 0);
  auto j21 = hauptmodul(2, 40);
  auto rhs = -j21.truncated(30) + QSeries::monomial(Rational(286720), 0, 30) + j21.inverse() * Rational(2097152);
  check_equal(img.series, rhs, -1, 30);
}

TEST_CASE("multiplicative operator bookkeeping and laws") {
  const std::int64_t P = 14;
  for (const char* name : {"E4", "E6", "Delta"}) {
    auto f = parse_form(name);
    for (std::int64_t n : {2, 3, 4, 5}) {
      auto img = hecke_multiplicative(f, n, 1, P);
      auto s1 = oracle::sigma(1, n).get_si();
      CHECK(img.weight == f.weight() * s1);
      CHECK(img.series.order() == s1 * f.order());
    }
  }
  // (f g)|*u = f|*u g|*u
  std::vector<std::string> names{"E4", "E6", "Delta"};
  for (auto& a : names)
    for (auto& b : names)
      for (std::int64_t n : {2, 3}) {
        auto f = parse_form(a), g = parse_form(b);
        auto lhs = hecke_multiplicative(f * g, n, 1, P).series;
        auto rhs = hecke_multiplicative(f, n, 1, P).series * hecke_multiplicative(g, n, 1, P).series;
        check_equal(lhs, rhs, 0, P);
      }
  // f|*T(q,q) = f
  auto e6 = parse_form("E6");
  auto tqq = apply_multiplicative(e6, AlgebraElement::basis(1, 3, 3), P);
  check_equal(tqq.series, eisenstein(6, P), 0, P);
}

TEST_CASE("representation law and composition formula") {
  const std::int64_t P = 16;
  auto d = parse_form("Delta");
  // (Delta|*T(2))|*T(2) = Delta|*(T(2)T(2)) = (Delta|*T(4)) Delta^2
  auto once = hecke_multiplicative(d, 2, 1, 60);
  auto twice = hecke_multiplicative(once.as_expression(), 2, 1, P);
  auto via_ring = apply_multiplicative(d, algebra_multiply(t_n(2, 1), t_n(2, 1)), P);
  auto via_formula = hecke_multiplicative(d, 4, 1, P).series * delta(P).pow(2);
  check_equal(twice.series, via_ring.series, 0, P);
  check_equal(twice.series, via_formula.truncated(P), 0, P);

  auto e4 = parse_form("E4");
  // f|*T(m)T(n) = prod_{d | (m,n)} (f|*T(mn/d^2))^d
  auto check_pair = [&](std::int64_t m, std::int64_t n, const QSeries& rhs) {
    auto lhs = apply_multiplicative(e4, algebra_multiply(t_n(m, 1), t_n(n, 1)), P).series;
    check_equal(lhs, rhs, 0, P);
  };
  auto e4t = [&](std::int64_t n) { return hecke_multiplicative(e4, n, 1, P).series; };
  check_pair(2, 2, e4t(4) * eisenstein(4, P).pow(2));
  check_pair(2, 3, e4t(6));
  check_pair(4, 2, e4t(8) * e4t(2).pow(2));
}

TEST_CASE("multiplicative Hecke equivariance of the log derivative") {
  auto f = parse_form("E4");
  auto base = log_derivative(expression_qexp(f, 20));
  for (std::int64_t p : {2, 3}) {
    auto img = log_derivative(hecke_multiplicative(f, p, 1, 5).series);
    for (std::int64_t m = 1; m < 5 && p * m < 20; ++m) {
      Rational rhs = base.coeff(p * m) + (m % p == 0 ? Rational(p) * base.coeff(m / p) : Rational(0));
      CHECK(img.coeff(m) == rhs);
    }
  }
}
