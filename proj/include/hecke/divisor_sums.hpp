#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/curve.hpp"
#include "hecke/niebur.hpp"

namespace hecke {

// F: X_0(N) -> C. interior takes any tau in H; cusp values are explicit.
struct PointEvaluator {
  std::string name;
  std::int64_t level = 1;
  std::function<PointValue(const Complex&)> interior;
  std::map<P1Label, Complex> cusp_values;
  std::optional<Rational> constant;  // set for F = const, which pairs exactly
};

PointEvaluator constant_evaluator(std::int64_t level, const Rational& c);
// j_n = j_paper | T(n), with F(inf) = 24 sigma_1(n).
PointEvaluator jn_evaluator(std::int64_t n, int digits = 50);
// F_{N,-m}(., s); no cusp values.
PointEvaluator niebur_evaluator(std::int64_t level, std::int64_t m, const EvalParams& params);
// F|T(n): sum of F over the images alpha z; cusp values where every image has one.
PointEvaluator hecke_image(const PointEvaluator& f, std::int64_t n, std::int64_t level);

struct Contribution {
  std::string point;
  Rational coeff;
  Complex value;
  double error = 0;
};

struct PairingResult {
  Complex value;
  double error = 0;
  bool exact = false;
  Rational exact_value;  // valid when exact
  std::vector<Contribution> breakdown;
};

// sum n_z F(z); fibre points are resolved numerically first.
PairingResult pair(const PointEvaluator& f, const Divisor& d);

// (j_n, f)_BKO at level one.
PairingResult bko_pairing(std::int64_t n, const FormExpression& f, int digits = 50);
// -Coeff_{q^m}(Theta f / f), exactly.
Rational r_at_s1(std::int64_t level, std::int64_t m, const FormExpression& f);
// Coeff_{q^m}(Theta f / f) of a q-expansion.
Rational log_derivative_coeff(const QSeries& f, std::int64_t m);
// Pairing of F_{N,-m}(., s) with div f; refuses divisors meeting the cusps.
PairingResult r_numeric(std::int64_t level, std::int64_t m, const FormExpression& f, const EvalParams& params);
PairingResult r_numeric(std::int64_t m, const Divisor& d, const EvalParams& params);

struct EvalReport {
  std::string suite;
  std::string label;
  bool passed = false;
  std::string lhs;
  std::string rhs;
  std::string tolerance;  // "exact" or a bound
  std::string detail;
};

// Coeff_{q^m} of Theta(f|*T(p))/(f|*T(p)) against Coeff_{q^{pm}} + p Coeff_{q^{m/p}} of Theta f/f.
EvalReport verify_equivariance(std::int64_t p, std::int64_t m, const FormExpression& f, std::int64_t level);
// D_F(T(n) D) against D_{F|T(n)}(D).
EvalReport verify_prop_divisor_sums(std::int64_t n, const PointEvaluator& f, const Divisor& d, double tolerance);

std::string format_complex(const Complex& z, int digits = 30);

}  // namespace hecke
