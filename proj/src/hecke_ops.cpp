#include "hecke/hecke_ops.hpp"

#include <numeric>

namespace hecke {

namespace {

Rational pow_ratio(std::int64_t base, long e) { return rational_pow(Rational(base), e); }

void require_integral(const QSeries& f) {
  if (f.den() != 1) throw Error(ErrorKind::NotIntegralSeries, "Hecke formula needs a series in integral powers of q");
}

// Expands u into its left-coset representatives, each with its multiplicity.
std::vector<std::pair<Matrix2, std::int64_t>> expand(const AlgebraElement& u) {
  std::vector<std::pair<Matrix2, std::int64_t>> out;
  for (const auto& [label, mult] : u.terms())
    for (const auto& r : double_coset_reps(u.level(), label.first, label.second)) out.emplace_back(r, mult);
  return out;
}

Rational weight_factor(int k, const Matrix2& m) {
  if (k % 2) throw Error(ErrorKind::UnsupportedWeightParity, "weighted slash needs even weight");
  return pow_ratio(m.det(), k / 2) * pow_ratio(m.d, -k);
}

}  // namespace

QSeries hecke_additive_formula(const QSeries& f, int k, std::int64_t n, AdditiveNormalization norm) {
  if (k % 2) throw Error(ErrorKind::UnsupportedWeightParity, "n^{1-k/2} is irrational for odd k = " + std::to_string(k));
  if (n < 1) throw Error(ErrorKind::UnsupportedParameter, "T(n) needs n >= 1");
  require_integral(f);
  const Rational scale = norm == AdditiveNormalization::Paper ? pow_ratio(n, 1 - k / 2) : Rational(1);
  const std::int64_t end = f.end() > 0 ? (f.end() + n - 1) / n : f.end();
  const std::int64_t start = f.is_zero() ? end : std::min<std::int64_t>(f.order() * n, std::max<std::int64_t>(f.order(), 0));
  if (start >= end) return QSeries::zero(end);
  const auto divs = divisors(n);
  std::vector<Rational> v;
  for (std::int64_t m = start; m < end; ++m) {
    Rational acc = 0;
    const std::int64_t g = m == 0 ? n : std::gcd(std::llabs(m), n);
    for (auto d : divs) {
      if (g % d) continue;
      acc += pow_ratio(d, k - 1) * f.coeff_int(m * n / (d * d));
    }
    v.push_back(scale * acc);
  }
  return QSeries::from_coeffs(start, std::move(v));
}

CSeries slash_upper(const QSeries& f, const Matrix2& m) {
  if (m.c != 0 || m.a <= 0 || m.d <= 0)
    throw Error(ErrorKind::UnsupportedParameter, "slash_upper needs an upper triangular matrix, got " + m.str());
  // f((a tau + b)/d) = sum c_e zeta_{dD}^{eb} q^{ae/(dD)}
  const QSeries g = rescale_exponents(f, Rational(1, 1) / Rational(m.d));
  return rescale_exponents(twist(g, m.b, g.den()), Rational(m.a));
}

QSeries slash_sum(const QSeries& f, int k, const std::vector<Matrix2>& reps) {
  if (reps.empty()) throw Error(ErrorKind::UnsupportedParameter, "empty representative list");
  CSeries acc;
  bool first = true;
  for (const auto& r : reps) {
    CSeries term = slash_upper(f, r) * Cyclotomic(weight_factor(k, r));
    acc = first ? term : acc + term;
    first = false;
  }
  return integral_projection(acc);
}

QSeries hecke_additive_cosets(const QSeries& f, int k, std::int64_t n, std::int64_t level) {
  return slash_sum(f, k, left_coset_reps(level, n));
}

QSeries apply_additive(const QSeries& f, int k, const AlgebraElement& u) {
  QSeries acc;
  bool first = true;
  for (const auto& [label, mult] : u.terms()) {
    QSeries term = slash_sum(f, k, double_coset_reps(u.level(), label.first, label.second)) * Rational(mult);
    acc = first ? term : acc + term;
    first = false;
  }
  if (first) throw Error(ErrorKind::UnsupportedParameter, "zero Hecke element");
  return acc;
}

QSeries slash_product(const QSeries& f, int k, const std::vector<Matrix2>& reps, SlashConvention conv) {
  if (reps.empty()) throw Error(ErrorKind::UnsupportedParameter, "empty representative list");
  if (f.is_zero()) throw Error(ErrorKind::NonUnitLeading, "multiplicative Hecke image of the zero series");
  CSeries acc;
  Rational constant = 1;
  bool first = true;
  for (const auto& r : reps) {
    CSeries term = slash_upper(f, r);
    if (conv == SlashConvention::Weighted) constant *= weight_factor(k, r);
    acc = first ? term : acc * term;
    first = false;
  }
  return integral_projection(acc) * constant;
}

std::int64_t multiplicative_input_end(std::int64_t order, const std::vector<std::pair<Matrix2, std::int64_t>>& reps,
                                      std::int64_t prec) {
  // Factor i has order order*a/d and relative precision R*a/d (q units).
  Rational total_order = 0, worst = 0;
  for (const auto& [r, mult] : reps) {
    total_order += Rational(order * mult) * ratio(r.a, r.d);
    Rational dr = ratio(r.d, r.a);
    if (dr > worst) worst = dr;
  }
  Rational need = (Rational(prec) - total_order) * worst;
  BigInt rel = need.get_num() / need.get_den() + 1;
  if (rel < 1) rel = 1;
  return order + rel.get_si();
}

namespace {

MultiplicativeImage multiply_over(const FormExpression& f, const std::vector<std::pair<Matrix2, std::int64_t>>& reps,
                                  std::int64_t level, std::int64_t prec, SlashConvention conv) {
  const int k = f.weight();
  const std::int64_t order = f.order();
  std::vector<Matrix2> positive, negative;
  std::int64_t count = 0;
  for (const auto& [r, mult] : reps) {
    for (std::int64_t i = 0; i < std::llabs(mult); ++i) (mult > 0 ? positive : negative).push_back(r);
    count += mult;
  }
  const QSeries base = expression_qexp(f, multiplicative_input_end(order, reps, prec));
  QSeries out;
  if (!positive.empty()) out = slash_product(base, k, positive, conv);
  if (!negative.empty()) {
    QSeries inv = slash_product(base, k, negative, conv).inverse();
    out = positive.empty() ? inv : out * inv;
  }
  return {out.truncated(prec), static_cast<int>(k * count), level};
}

}  // namespace

MultiplicativeImage hecke_multiplicative(const FormExpression& f, std::int64_t n, std::int64_t level,
                                         std::int64_t prec, SlashConvention conv) {
  if (level % f.level())
    throw Error(ErrorKind::UnsupportedParameter, "form of level " + std::to_string(f.level()) +
                                                     " is not modular for Gamma_0(" + std::to_string(level) + ")");
  std::vector<std::pair<Matrix2, std::int64_t>> reps;
  for (const auto& r : left_coset_reps(level, n)) reps.emplace_back(r, 1);
  return multiply_over(f, reps, level, prec, conv);
}

MultiplicativeImage apply_multiplicative(const FormExpression& f, const AlgebraElement& u, std::int64_t prec,
                                         SlashConvention conv) {
  if (u.level() % f.level())
    throw Error(ErrorKind::UnsupportedParameter, "form level does not divide the Hecke element level");
  if (u.is_zero()) return {QSeries::monomial(Rational(1), 0, prec), 0, u.level()};
  return multiply_over(f, expand(u), u.level(), prec, conv);
}

}  // namespace hecke
