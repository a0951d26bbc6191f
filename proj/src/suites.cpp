#include "hecke/suites.hpp"

#include <array>
#include <map>
#include <random>
#include <sstream>

#include "hecke/arith.hpp"
#include "hecke/divisor_map.hpp"
#include "hecke/error.hpp"
#include "hecke/hecke_ops.hpp"
#include "hecke/niebur.hpp"

namespace hecke {

namespace {

using std::int64_t;
using Reports = std::vector<EvalReport>;

EvalReport exact(const std::string& suite, const std::string& label, const std::string& lhs,
                 const std::string& rhs, bool passed, const std::string& detail = "") {
  return {suite, label, passed, lhs, rhs, "exact", detail};
}

EvalReport exact(const std::string& suite, const std::string& label, const Rational& lhs, const Rational& rhs) {
  return exact(suite, label, to_string(lhs), to_string(rhs), lhs == rhs);
}

EvalReport numeric(const std::string& suite, const std::string& label, const Complex& lhs, const Complex& rhs,
                   double tolerance, bool relative = false) {
  double diff = static_cast<double>(abs(lhs - rhs));
  if (relative) diff /= static_cast<double>(abs(rhs));
  std::ostringstream tol, detail;
  tol << tolerance << (relative ? " relative" : "");
  detail << "difference " << diff;
  return {suite, label, diff < tolerance, format_complex(lhs, 25), format_complex(rhs, 25), tol.str(), detail.str()};
}

// Coefficients of q^lo .. q^{hi-1} of two integral-grid series.
EvalReport series_equal(const std::string& suite, const std::string& label, const QSeries& a, const QSeries& b,
                        int64_t lo, int64_t hi) {
  for (int64_t e = lo; e < hi; ++e)
    if (a.coeff_int(e) != b.coeff_int(e))
      return exact(suite, label, to_string(a.coeff_int(e)), to_string(b.coeff_int(e)), false,
                   "first mismatch at q^" + std::to_string(e));
  return exact(suite, label, "agree", "agree", true,
               "q^" + std::to_string(lo) + " .. q^" + std::to_string(hi - 1));
}

EvalReport divisors_equal(const std::string& suite, const std::string& label, const Divisor& a, const Divisor& b) {
  return exact(suite, label, a.str(), b.str(), a == b);
}

// Runs a case, turning a library error into a failed report.
void guarded(Reports& out, const std::string& suite, const std::string& label, const std::function<void(Reports&)>& f) {
  try {
    f(out);
  } catch (const std::exception& e) {
    out.push_back({suite, label, false, "", "", "", e.what()});
  }
}

Divisor point_minus_infinity(const HeegnerPoint& z, int64_t level) {
  Divisor d(level);
  d.add_point(z, 1);
  d.add_cusp(infinity_cusp(level), -1);
  return d;
}

AlgebraElement basis(int64_t level, int64_t a, int64_t d) { return AlgebraElement::basis(level, a, d); }

// Criterion 1: E4|*T(2) and E4|*T(3) as Eisenstein-Delta combinations.
Reports multiplicative_images() {
  const std::string s = "algebra";
  Reports out;
  const int64_t P = 30;
  guarded(out, s, "E4|*T(2)", [&](Reports& r) {
    auto img = hecke_multiplicative(parse_form("E4"), 2, 1, P);
    r.push_back(series_equal(s, "E4|*T(2) = E12 - (36882000/691) Delta", img.series,
                             eisenstein(12, P) - delta(P) * ratio(36882000, 691), 0, P));
    r.push_back(exact(s, "weight of E4|*T(2)", Rational(img.weight), Rational(12)));
  });
  guarded(out, s, "E4|*T(3)", [&](Reports& r) {
    auto img = hecke_multiplicative(parse_form("E4"), 3, 1, P);
    r.push_back(series_equal(s, "E4|*T(3) = E16 + (44449152000/3617) E4 Delta", img.series,
                             eisenstein(16, P) + eisenstein(4, P) * delta(P) * ratio(BigInt("44449152000"), 3617),
                             0, P));
  });
  return out;
}

// Criterion 2: log-derivative series.
Reports log_derivative_series() {
  const std::string s = "bko";
  Reports out;
  guarded(out, s, "Theta E4 / E4", [&](Reports& r) {
    const QSeries l = log_derivative(eisenstein(4, 6));
    const std::vector<Rational> expect{240, -53280, 12288960};
    for (int64_t m = 1; m <= 3; ++m)
      r.push_back(exact(s, "Coeff q^" + std::to_string(m) + " of Theta E4/E4", l.coeff_int(m),
                        expect[static_cast<std::size_t>(m - 1)]));
    const QSeries l2 = log_derivative(hecke_multiplicative(parse_form("E4"), 2, 1, 4).series);
    r.push_back(exact(s, "Coeff q^1 of Theta(E4|*T(2))/(E4|*T(2))", l2.coeff_int(1), Rational(-53280)));
    r.push_back(exact(s, "Theta(E4|*T(2))/(E4|*T(2)) begins at q^1", Rational(l2.order()), Rational(1)));
    const QSeries l3 = log_derivative(hecke_multiplicative(parse_form("E4"), 3, 1, 4).series);
    r.push_back(exact(s, "Coeff q^1 of Theta(E4|*T(3))/(E4|*T(3))", l3.coeff_int(1), Rational(12288960)));
    r.push_back(exact(s, "Theta(E4|*T(3))/(E4|*T(3)) begins at q^1", Rational(l3.order()), Rational(1)));
  });
  return out;
}

// Criterion 3: Hecke ring products.
Reports hecke_algebra() {
  const std::string s = "algebra";
  Reports out;
  guarded(out, s, "ring", [&](Reports& r) {
    const AlgebraElement sq = algebra_multiply(t_n(2, 1), t_n(2, 1));
    const AlgebraElement expect = basis(1, 1, 4) + basis(1, 2, 2) * 3;
    r.push_back(exact(s, "T(2) T(2) at N = 1", sq.str(), expect.str(), sq == expect));
    const AlgebraElement t4 = t_n(4, 1), e4 = basis(1, 1, 4) + basis(1, 2, 2);
    r.push_back(exact(s, "t_n(4, 1)", t4.str(), e4.str(), t4 == e4));
    int checked = 0, failed = 0;
    std::string first;
    for (int64_t N : {1, 2, 3})
      for (int64_t m = 1; m <= 6; ++m)
        for (int64_t n = 1; n <= 6; ++n) {
          const AlgebraElement lhs = algebra_multiply(t_n(m, N), t_n(n, N));
          AlgebraElement rhs(N);
          for (int64_t d : divisors(std::gcd(m, n))) {
            if (std::gcd(d, N) != 1) continue;
            rhs = rhs + algebra_multiply(basis(N, d, d), t_n(m * n / (d * d), N)) * d;
          }
          ++checked;
          if (!(lhs == rhs)) {
            ++failed;
            if (first.empty())
              first = "N=" + std::to_string(N) + " m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " +
                      lhs.str() + " vs " + rhs.str();
          }
        }
    r.push_back(exact(s, "T(m)T(n) = sum d T(d,d) T(mn/d^2), m, n <= 6, N in {1,2,3}",
                      std::to_string(checked - failed) + " identities hold", std::to_string(checked) + " identities",
                      failed == 0, first));
  });
  return out;
}

// Criterion 4: the Hecke action on divisors.
Reports divisor_action() {
  const std::string s = "divisor-hecke";
  Reports out;
  guarded(out, s, "level one", [&](Reports& r) {
    Divisor expect(1);
    expect.add_point({1, 0, 4}, 2);
    expect.add_point({1, 0, 1}, 1);
    expect.add_cusp(infinity_cusp(1), -3);
    r.push_back(divisors_equal(s, "T(2)([i] - [inf]) at N = 1", hecke_divisor(2, point_minus_infinity({1, 0, 1}, 1), 1),
                               expect));
  });
  guarded(out, s, "level two", [&](Reports& r) {
    Divisor expect(2);
    expect.add_point(make_point(4, 0, 1), 1);
    expect.add_point(make_point(2, -2, 1), 1);
    expect.add_cusp(infinity_cusp(2), -2);
    const Divisor got = hecke_divisor(2, point_minus_infinity({1, 0, 1}, 2), 2);
    r.push_back(divisors_equal(s, "T(2)([i] - [inf]) at N = 2", got, expect));
    r.push_back(exact(s, "i/2 and (i+1)/2 stay distinct at N = 2", std::to_string(got.interior().size()), "2",
                      got.interior().size() == 2));
  });
  return out;
}

// Criterion 5: divisor of (j - 1728)|*T(2) from its q-expansion.
Reports theorem_round_trip() {
  const std::string s = "divisor-hecke";
  Reports out;
  guarded(out, s, "(j - 1728)|*T(2)", [&](Reports& r) {
    const FormExpression f = parse_form("jminus:1728");
    const auto img = hecke_multiplicative(f, 2, 1, 15);
    std::map<std::string, int> roots;
    bool rational = true;
    for (const PolynomialRoot& root : polynomial_roots(weight0_to_j_polynomial(img.series))) {
      rational = rational && root.rational;
      roots[to_string(root.exact)] = root.multiplicity;
    }
    const bool ok = rational && roots == std::map<std::string, int>{{"1728/1", 1}, {"287496/1", 2}};
    r.push_back(exact(s, "root multiset of (j - 1728)|*T(2) in j", ok ? "{1728:1, 287496:2}" : "other",
                      "{1728:1, 287496:2}", ok));
    const Divisor d = level1_series_divisor(img.series, 0);
    r.push_back(exact(s, "cusp coefficient of div((j - 1728)|*T(2))", d.infinity_coefficient(), Rational(-3)));
    r.push_back(divisors_equal(s, "div((j - 1728)|*T(2)) = T(2) div(j - 1728)", d,
                               hecke_divisor(2, divisor_of_form(f, 1), 1)));
    r.push_back(numeric(s, "j(2i) = 287496", j_value(HeegnerPoint{1, 0, 4}.value()), Complex(Real(287496)), 1e-20));
  });
  return out;
}

// Criterion 6: the level-two example where equivariance fails.
Reports equivariance_failure() {
  const std::string s = "divisor-hecke";
  Reports out;
  guarded(out, s, "(j_{2,1} - 512)|*T(2)", [&](Reports& r) {
    const FormExpression f = parse_form("haupt:2:512");
    const auto img = hecke_multiplicative(f, 2, 2, 30);
    const QSeries t = hauptmodul(2, 40);
    const QSeries expect =
        t.truncated(30) * Rational(-1) + QSeries::monomial(Rational(286720), 0, 30) + t.inverse() * Rational(2097152);
    r.push_back(series_equal(s, "(j_{2,1} - 512)|*T(2) = -j_{2,1} + 286720 + 2097152/j_{2,1}", img.series, expect,
                             -1, 30));
    const Divisor d = hauptmodul_series_divisor(img.series, 2);
    const Divisor image = hecke_divisor(2, divisor_of_form(f, 2), 2);
    r.push_back(exact(s, "inf coefficient of div((j_{2,1} - 512)|*T(2))", d.infinity_coefficient(), Rational(-1)));
    r.push_back(exact(s, "inf coefficient of T(2) div(j_{2,1} - 512)", image.infinity_coefficient(), Rational(-2)));
    r.push_back(exact(s, "div(f|*T(2)) != T(2) div(f) at N = 2", d.str(), image.str(), d != image));
  });
  return out;
}

// Criterion 7: exact Rohrlich-Hecke equivariance at level one.
Reports exact_equivariance() {
  const std::string s = "equivariance";
  Reports out;
  for (const char* key : {"E4", "E6", "Delta", "jminus:1728"})
    for (int64_t p : {2, 3, 5})
      for (int64_t m : {1, 2, 3})
        guarded(out, s, key, [&](Reports& r) { r.push_back(verify_equivariance(p, m, parse_form(key), 1)); });
  return out;
}

Reports level_three_equivariance() {
  const std::string s = "equivariance";
  Reports out;
  for (const char* key : {"eta:3:1^6,3^6", "eta:3:1^9,3^-3", "haupt:3:5"})
    for (int64_t p : {2, 5})
      for (int64_t m : {1, 2, 3})
        guarded(out, s, key, [&](Reports& r) {
          EvalReport rep = verify_equivariance(p, m, parse_form(key), 3);
          rep.label += std::string(" f=") + key;
          r.push_back(rep);
        });
  return out;
}

// Criterion 8: CM values of j_n and the BKO pairing.
Reports bko_numeric() {
  const std::string s = "bko";
  Reports out;
  guarded(out, s, "j_1(omega)", [&](Reports& r) {
    const Complex omega(Real(-0.5), sqrt(Real(3)) / 2);
    r.push_back(numeric(s, "j_1(omega) = -720", jn_value(1, omega, 50), Complex(Real(-720)), 1e-30));
  });
  for (int64_t n : {1, 2, 3})
    guarded(out, s, "(j_n, E4)", [&](Reports& r) {
      const FormExpression f = parse_form("E4");
      const Rational expect = r_at_s1(1, n, f);
      r.push_back(numeric(s, "(j_" + std::to_string(n) + ", E4)_BKO = -Coeff q^" + std::to_string(n) + " Theta E4/E4",
                          bko_pairing(n, f, 50).value, Complex(rational_to_real(expect)), 1e-20));
    });
  return out;
}

Reports bko_consistency() {
  const std::string s = "bko";
  Reports out;
  for (const char* key : {"E6", "jminus:1728", "Delta"})
    for (int64_t n : {1, 2, 3})
      guarded(out, s, key, [&](Reports& r) {
        const FormExpression f = parse_form(key);
        r.push_back(numeric(s, "(j_" + std::to_string(n) + ", " + key + ")_BKO against the log derivative",
                            bko_pairing(n, f, 50).value, Complex(rational_to_real(r_at_s1(1, n, f))), 1e-20));
      });
  return out;
}

// Criterion 9: Theta-normalised p-plication of the harmonic slices.
EvalReport pplication(int64_t N, int64_t m, int64_t p) {
  const int64_t P = 25;
  const QSeries f = harmonic_slice(N, m, p * P + 1);
  const QSeries lhs = hecke_additive_cosets(f, 0, p, N);
  QSeries rhs = harmonic_slice(N, p * m, P);
  const int64_t lower = N % p == 0 ? N / p : N;
  if (m % p == 0) rhs = rhs + harmonic_slice(lower, m / p, P) * Rational(p);
  if (N % p == 0) rhs = rhs - rescale_exponents(harmonic_slice(lower, m, P), Rational(p)).truncated(P);
  std::ostringstream label;
  label << "(N,m,p) = (" << N << "," << m << "," << p << ")";
  return series_equal("p-plication", label.str(), theta(lhs), theta(rhs), -p * m, P);
}

Reports pplication_cases(const std::vector<std::array<int64_t, 3>>& cases) {
  Reports out;
  for (const auto& c : cases)
    guarded(out, "p-plication", "p-plication", [&](Reports& r) { r.push_back(pplication(c[0], c[1], c[2])); });
  return out;
}

// Criterion 10: Hecke relations of Niebur-Poincare series.
Reports niebur_relations() {
  const std::string s = "niebur";
  Reports out;
  const Complex i(Real(0), Real(1)), two(Real(2)), one(Real(1));
  auto t2 = [&](int64_t m, const Complex& tau, const EvalParams& p) {
    return niebur_value(1, m, tau / two, p).value + niebur_value(1, m, (tau + one) / two, p).value +
           niebur_value(1, m, two * tau, p).value;
  };
  guarded(out, s, "F|T(2)", [&](Reports& r) {
    EvalParams p;
    p.C = 300;
    p.s = 1.5;
    r.push_back(numeric(s, "F_{1,-1}|T(2) = F_{1,-2} at tau = i, s = 1.5, C = 300", t2(1, i, p),
                        niebur_value(1, 2, i, p).value, 1e-3));
  });
  guarded(out, s, "E|T(2)", [&](Reports& r) {
    EvalParams p;
    p.C = 300;
    p.s = 2;
    r.push_back(numeric(s, "E|T(2) = (2^2 + 2^-1) E at tau = i, s = 2", t2(0, i, p),
                        niebur_value(1, 0, i, p).value * Complex(Real(4.5)), 1e-3, true));
  });
  return out;
}

Reports niebur_invariance() {
  const std::string s = "niebur";
  Reports out;
  guarded(out, s, "invariance", [&](Reports& r) {
    EvalParams p;
    p.reduce = false;
    const Complex tau(Real(0.25), Real(1));
    const Complex f = niebur_value(1, 1, tau, p).value;
    r.push_back(numeric(s, "F(tau + 1) = F(tau), tau = 1/4 + i", niebur_value(1, 1, tau + Complex(Real(1)), p).value,
                        f, 1e-3));
    r.push_back(numeric(s, "F(-1/tau) = F(tau), tau = 1/4 + i", niebur_value(1, 1, Complex(Real(-1)) / tau, p).value,
                        f, 1e-3));
    double last = 1e300;
    bool monotone = true;
    for (int64_t C : {10, 30, 100, 300}) {
      p.C = C;
      const double e = niebur_value(1, 1, tau, p).error;
      monotone = monotone && e < last;
      last = e;
    }
    r.push_back(exact(s, "error estimate decreases in C", monotone ? "decreasing" : "not decreasing", "decreasing",
                      monotone));
  });
  return out;
}

// Criterion 11: property suites.
Reports valence_degrees() {
  const std::string s = "algebra";
  Reports out;
  const std::vector<std::pair<const char*, int64_t>> cases{
      {"E4", 1},           {"E6", 1},           {"Delta", 1},          {"E4*E6", 1},       {"jminus:1728", 1},
      {"E4", 2},           {"Delta", 2},        {"Delta:2", 2},        {"haupt:2:512", 2}, {"E6", 3},
      {"Delta:3", 3},      {"eta:4:1^8,4^-8", 4}, {"eta:6:1^2,2^2,3^2,6^2", 6}, {"E4", 5}, {"haupt:5:7", 5},
      {"Delta*Delta:2", 4}, {"E4", 12},         {"haupt:4:-16", 4}};
  for (const auto& [key, N] : cases)
    guarded(out, s, key, [&](Reports& r) {
      const FormExpression f = parse_form(key);
      const Divisor d = divisor_of_form(f, N);
      r.push_back(exact(s, std::string("valence: deg div ") + key + " at N = " + std::to_string(N), d.degree(),
                        ratio(f.weight() * gamma0_index(N), 12)));
    });
  return out;
}

Reports ring_laws() {
  const std::string s = "algebra";
  Reports out;
  guarded(out, s, "additive", [&](Reports& r) {
    const int64_t P = 12;
    const QSeries d = delta(4 * P + 8);
    const AlgebraElement t2 = t_n(2, 1);
    const QSeries twice = apply_additive(apply_additive(d, 12, t2), 12, t2);
    const QSeries ring = apply_additive(d, 12, algebra_multiply(t2, t2));
    r.push_back(series_equal(s, "additive: (Delta|T(2))|T(2) = Delta|(T(2)T(2))", twice, ring, 0, P));
    const QSeries j21 = hauptmodul(2, 6 * P + 8);
    const AlgebraElement t3 = t_n(3, 2);
    r.push_back(series_equal(s, "additive: T(2) T(3) = T(3) T(2) on j_{2,1} at N = 2",
                             apply_additive(apply_additive(j21, 0, t_n(2, 2)), 0, t3),
                             apply_additive(apply_additive(j21, 0, t3), 0, t_n(2, 2)), -6, P));
  });
  guarded(out, s, "multiplicative", [&](Reports& r) {
    const int64_t P = 14;
    const FormExpression d = parse_form("Delta");
    const auto once = hecke_multiplicative(d, 2, 1, 60);
    const auto twice = hecke_multiplicative(once.as_expression(), 2, 1, P);
    const auto ring = apply_multiplicative(d, algebra_multiply(t_n(2, 1), t_n(2, 1)), P);
    r.push_back(series_equal(s, "multiplicative: (Delta|*T(2))|*T(2) = Delta|*(T(2)T(2))", twice.series, ring.series,
                             0, P));
    const FormExpression e4 = parse_form("E4"), e6 = parse_form("E6");
    r.push_back(series_equal(s, "multiplicative: (E4 E6)|*T(3) = (E4|*T(3))(E6|*T(3))",
                             hecke_multiplicative(e4 * e6, 3, 1, P).series,
                             hecke_multiplicative(e4, 3, 1, P).series * hecke_multiplicative(e6, 3, 1, P).series, 0,
                             P));
  });
  guarded(out, s, "divisors", [&](Reports& r) {
    for (int64_t N : {1, 2, 3}) {
      const Divisor d = point_minus_infinity({1, 1, 1}, N) + point_minus_infinity({2, 1, 3}, N) * Rational(2);
      const AlgebraElement u = t_n(2, N), v = N == 2 ? t_n(3, N) : t_n(2, N);
      r.push_back(divisors_equal(s, "divisors: T(u)T(v)D = T(uv)D at N = " + std::to_string(N),
                                 hecke_divisor(u, hecke_divisor(v, d)), hecke_divisor(algebra_multiply(u, v), d)));
    }
  });
  return out;
}

Matrix2 random_gamma0(std::mt19937_64& rng, int64_t level) {
  std::uniform_int_distribution<int> pick(0, 1);
  std::uniform_int_distribution<int64_t> shift(-3, 3);
  Matrix2 g{1, 0, 0, 1};
  for (int step = 0; step < 6; ++step) {
    const int64_t k = shift(rng);
    g = g * (pick(rng) == 0 ? Matrix2{1, k, 0, 1} : Matrix2{1, 0, level * k, 1});
  }
  return g;
}

Reports reduction_idempotence() {
  const std::string s = "divisor-hecke";
  Reports out;
  guarded(out, s, "reduce_point", [&](Reports& r) {
    std::mt19937_64 rng(2024);
    const std::vector<HeegnerPoint> points{{1, 0, 1}, {1, 1, 1}, {1, 0, 4}, {2, 1, 3}, {5, 2, 1}, {3, 3, 1}};
    for (int64_t N : {1, 2, 3}) {
      int failed = 0;
      std::string first;
      for (int trial = 0; trial < 1000; ++trial) {
        const HeegnerPoint z = points[static_cast<std::size_t>(trial) % points.size()];
        const CanonicalPoint c = reduce_point(z, N);
        const HeegnerPoint moved = act_matrix(random_gamma0(rng, N), z);
        const bool ok = reduce_point(c.point, N).point == c.point && reduce_point(moved, N).point == c.point &&
                        canonical_key(moved, N) == canonical_key(z, N);
        if (!ok && failed++ == 0) first = z.str() + " moved to " + moved.str();
      }
      r.push_back(exact(s, "reduce_point idempotent on 1000 Gamma_0(" + std::to_string(N) + ") translates",
                        std::to_string(1000 - failed) + " stable", "1000 stable", failed == 0, first));
    }
  });
  return out;
}

Reports galois_orbits() {
  const std::string s = "algebra";
  Reports out;
  guarded(out, s, "integral_projection", [&](Reports& r) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> dist(-5, 5);
    int failed = 0, total = 0;
    for (int64_t n : {2, 3, 4, 5, 6})
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rational> c(10);
        for (auto& x : c) x = Rational(dist(rng));
        c[0] = 1 + std::abs(dist(rng));
        const QSeries f = rescale_exponents(QSeries::from_coeffs(0, c), ratio(1, n));
        CSeries acc = twist(f, 0, n);
        for (int64_t j = 1; j < n; ++j) acc = acc * twist(f, j, n);
        ++total;
        try {
          integral_projection(acc);
        } catch (const Error&) {
          ++failed;
        }
      }
    // The E4|*T(2) orbit: E4(tau/2) E4((tau+1)/2).
    const QSeries half = rescale_exponents(eisenstein(4, 12), ratio(1, 2));
    ++total;
    try {
      integral_projection(twist(half, 0, 2) * twist(half, 1, 2));
    } catch (const Error&) {
      ++failed;
    }
    r.push_back(exact(s, "integral_projection of full Galois-orbit products",
                      std::to_string(total - failed) + " integral", std::to_string(total) + " integral", failed == 0));
  });
  return out;
}

Reports divisor_sum_identities() {
  const std::string s = "divisor-hecke";
  Reports out;
  guarded(out, s, "divisor sums", [&](Reports& r) {
    Divisor i(1);
    i.add_point({1, 0, 1}, 1);
    r.push_back(verify_prop_divisor_sums(2, jn_evaluator(1), i, 1e-25));
    r.push_back(verify_prop_divisor_sums(2, jn_evaluator(2), divisor_of_form(parse_form("E4"), 1), 1e-20));
    r.push_back(verify_prop_divisor_sums(3, constant_evaluator(1, Rational(1)), point_minus_infinity({1, 1, 1}, 1), 0));
  });
  return out;
}

Reports concat(std::initializer_list<Reports> parts) {
  Reports out;
  for (const Reports& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> list{
      {1, "multiplicative Hecke images of E4", 5, multiplicative_images},
      {2, "log-derivative series of E4 and its Hecke images", 0, log_derivative_series},
      {3, "Hecke algebra products", 10, hecke_algebra},
      {4, "Hecke action on divisors at levels 1 and 2", 0, divisor_action},
      {5, "divisor of (j - 1728)|*T(2) round trip", 0, theorem_round_trip},
      {6, "equivariance failure at p | N", 0, equivariance_failure},
      {7, "exact Rohrlich-Hecke equivariance", 30, exact_equivariance},
      {8, "BKO numerics", 0, bko_numeric},
      {9, "p-plication", 0,
       [] { return pplication_cases({{1, 1, 2}, {1, 2, 2}, {1, 1, 3}, {2, 1, 2}, {4, 1, 2}}); }},
      {10, "Niebur-Poincare Hecke relations", 60, niebur_relations},
      {11, "property suites", 0,
       [] { return concat({valence_degrees(), ring_laws(), reduction_idempotence(), galois_orbits()}); }},
  };
  return list;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bko", "equivariance", "divisor-hecke", "p-plication", "algebra", "niebur"};
  return names;
}

std::vector<EvalReport> run_suite(const std::string& name) {
  if (name == "bko") return concat({log_derivative_series(), bko_numeric(), bko_consistency()});
  if (name == "equivariance") return concat({exact_equivariance(), level_three_equivariance()});
  if (name == "divisor-hecke")
    return concat({divisor_action(), theorem_round_trip(), equivariance_failure(), reduction_idempotence(),
                   divisor_sum_identities()});
  if (name == "p-plication")
    return pplication_cases({{1, 1, 2}, {1, 2, 2}, {1, 1, 3}, {3, 1, 2}, {2, 1, 2}, {2, 2, 2}, {4, 1, 2}});
  if (name == "algebra")
    return concat({multiplicative_images(), hecke_algebra(), valence_degrees(), ring_laws(), galois_orbits()});
  if (name == "niebur") return concat({niebur_relations(), niebur_invariance()});
  throw Error(ErrorKind::UnsupportedParameter, "unknown suite " + name);
}

}  // namespace hecke
