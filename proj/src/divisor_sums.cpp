#include "hecke/divisor_sums.hpp"

#include <numeric>
#include <sstream>

#include "hecke/arith.hpp"
#include "hecke/error.hpp"
#include "hecke/forms.hpp"
#include "hecke/hecke_ops.hpp"

namespace hecke {

namespace {

using std::int64_t;

// Class on X_0(level) of the cusp alpha (num/den), den = 0 for infinity.
P1Label image_cusp(const Matrix2& alpha, int64_t num, int64_t den, int64_t level) {
  int64_t x = alpha.a * num + alpha.b * den, y = alpha.c * num + alpha.d * den;
  const int64_t g = std::gcd(x, y);
  x /= g;
  y /= g;
  if (y < 0 || (y == 0 && x < 0)) {
    x = -x;
    y = -y;
  }
  return cusp_key(x, y, level);
}

// The cusp of X_0(N) seen on X_0(M), M | N.
P1Label push_cusp(const P1Label& key, int64_t from, int64_t to) {
  if (from == to) return key;
  CuspInfo info = cusp_info(key, from);
  return cusp_key(info.num, info.den, to);
}

std::string numeric_label(const Complex& z) {
  std::ostringstream out;
  out.precision(12);
  const auto w = to_double(z);
  out << "[~" << w.real() << (w.imag() < 0 ? "-" : "+") << std::abs(w.imag()) << "i]";
  return out.str();
}

}  // namespace

std::string format_complex(const Complex& z, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << real(z);
  const Real im = imag(z);
  out << (im < 0 ? "-" : "+") << abs(im) << "i";
  return out.str();
}

PointEvaluator constant_evaluator(int64_t level, const Rational& c) {
  PointEvaluator f;
  f.name = "const:" + to_string(c);
  f.level = level;
  const Complex v(rational_to_real(c));
  f.interior = [v](const Complex&) { return PointValue{v, 0}; };
  for (const CuspInfo& info : cusps(level)) f.cusp_values[info.key] = v;
  f.constant = c;
  return f;
}

PointEvaluator jn_evaluator(int64_t n, int digits) {
  if (n < 1) throw Error(ErrorKind::UnsupportedParameter, "j_n needs n >= 1");
  PointEvaluator f;
  f.name = "j" + std::to_string(n);
  f.level = 1;
  const double err = std::pow(10.0, -(digits - 10));
  f.interior = [n, digits, err](const Complex& tau) { return PointValue{jn_value(n, tau, digits), err}; };
  f.cusp_values[infinity_cusp(1)] = Complex(rational_to_real(Rational(24 * divisor_sigma(1, n))));
  return f;
}

PointEvaluator niebur_evaluator(int64_t level, int64_t m, const EvalParams& params) {
  PointEvaluator f;
  std::ostringstream name;
  name << "F(N=" << level << ",m=" << m << ",s=" << params.s << ")";
  f.name = name.str();
  f.level = level;
  f.interior = [level, m, params](const Complex& tau) { return niebur_value(level, m, tau, params); };
  return f;
}

PointEvaluator hecke_image(const PointEvaluator& f, int64_t n, int64_t level) {
  if (level % f.level != 0) throw Error(ErrorKind::UnsupportedParameter, "evaluator level must divide the level");
  const std::vector<Matrix2> reps = left_coset_reps(level, n);
  PointEvaluator g;
  g.name = f.name + "|T(" + std::to_string(n) + ")";
  g.level = level;
  g.interior = [f, reps](const Complex& tau) {
    PointValue sum{Complex(Real(0)), 0};
    for (const Matrix2& a : reps) {
      PointValue v = f.interior(mobius(a, tau));
      sum.value += v.value;
      sum.error += v.error;
    }
    return sum;
  };
  for (const CuspInfo& info : cusps(level)) {
    Complex total(Real(0));
    bool known = true;
    for (const Matrix2& a : reps) {
      auto it = f.cusp_values.find(image_cusp(a, info.den == 0 ? 1 : info.num, info.den, f.level));
      if (it == f.cusp_values.end()) {
        known = false;
        break;
      }
      total += it->second;
    }
    if (known) g.cusp_values[info.key] = total;
  }
  if (f.constant) g.constant = *f.constant * Rational(static_cast<long>(reps.size()));
  return g;
}

PairingResult pair(const PointEvaluator& f, const Divisor& d0) {
  const int64_t level = d0.level();
  if (level % f.level != 0)
    throw Error(ErrorKind::UnsupportedParameter, "evaluator level must divide the divisor level");
  const Divisor d = resolve_fibers(d0);
  PairingResult out;
  out.value = Complex(Real(0));
  if (f.constant) {
    out.exact = true;
    out.exact_value = *f.constant * d.degree();
  }
  auto add = [&](std::string point, const Rational& c, const PointValue& v) {
    out.value += Complex(rational_to_real(c)) * v.value;
    const double scale = std::abs(c.get_d());
    out.error += scale * v.error;
    out.breakdown.push_back({std::move(point), c, v.value, v.error});
  };
  for (const auto& [key, c] : d.interior()) {
    const HeegnerPoint z = key_point(key, level);
    add(z.str(), c, f.interior(z.value()));
  }
  for (const NumericPoint& p : d.numeric()) {
    const Complex z = mobius(lift_label(p.label, level), p.tau);
    add(numeric_label(z), p.coeff, f.interior(z));
  }
  for (const auto& [key, c] : d.cusp_part()) {
    auto it = f.cusp_values.find(push_cusp(key, level, f.level));
    const std::string name = "[" + cusp_info(key, level).str() + "]";
    if (it == f.cusp_values.end())
      throw Error(ErrorKind::MissingCuspValue, f.name + " has no value at the cusp " + name);
    add(name, c, PointValue{it->second, 0});
  }
  if (out.exact) out.value = Complex(rational_to_real(out.exact_value));
  return out;
}

PairingResult bko_pairing(int64_t n, const FormExpression& f, int digits) {
  if (f.level() != 1) throw Error(ErrorKind::UnsupportedParameter, "the BKO pairing is defined at level one");
  return pair(jn_evaluator(n, digits), divisor_of_form(f, 1));
}

Rational log_derivative_coeff(const QSeries& f, int64_t m) {
  if (f.den() != 1) throw Error(ErrorKind::NotIntegralSeries, "log derivative coefficient needs integral exponents");
  return log_derivative(f).coeff(m);
}

Rational r_at_s1(int64_t level, int64_t m, const FormExpression& f) {
  if (m < 1) throw Error(ErrorKind::UnsupportedParameter, "m must be positive");
  if (level % f.level() != 0) throw Error(ErrorKind::UnsupportedParameter, "form level must divide N");
  const int64_t prec = m + 2 + std::max<int64_t>(f.order(), 0);
  return -log_derivative_coeff(expression_qexp(f, prec), m);
}

PairingResult r_numeric(int64_t m, const Divisor& d, const EvalParams& params) {
  if (d.has_cusp_support())
    throw Error(ErrorKind::MissingCuspValue, "the divisor meets the cusps; no cusp value is defined for real s");
  return pair(niebur_evaluator(d.level(), m, params), d);
}

PairingResult r_numeric(int64_t level, int64_t m, const FormExpression& f, const EvalParams& params) {
  if (m < 0) throw Error(ErrorKind::UnsupportedParameter, "m must be non-negative");
  return r_numeric(m, divisor_of_form(f, level), params);
}

EvalReport verify_equivariance(int64_t p, int64_t m, const FormExpression& f, int64_t level) {
  if (p < 2 || !is_prime(p)) throw Error(ErrorKind::UnsupportedParameter, "p must be prime");
  if (m < 1) throw Error(ErrorKind::UnsupportedParameter, "m must be positive");
  if (level % p == 0) throw Error(ErrorKind::UnsupportedParameter, "p must not divide N");
  const int64_t h = std::abs(f.order());
  const auto image = hecke_multiplicative(f, p, level, m + 2 + h * (p + 1));
  const QSeries base = expression_qexp(f, p * m + 2 + h);
  const Rational lhs = log_derivative_coeff(image.series, m);
  Rational rhs = log_derivative_coeff(base, p * m);
  if (m % p == 0) rhs += Rational(p) * log_derivative_coeff(base, m / p);
  EvalReport r;
  r.suite = "equivariance";
  std::ostringstream label;
  label << "p=" << p << " m=" << m << " f=" << atom_name(f.factors().front().first)
        << (f.factors().size() > 1 ? "*..." : "") << " N=" << level;
  r.label = label.str();
  r.lhs = to_string(lhs);
  r.rhs = to_string(rhs);
  r.tolerance = "exact";
  r.passed = lhs == rhs;
  return r;
}

EvalReport verify_prop_divisor_sums(int64_t n, const PointEvaluator& f, const Divisor& d, double tolerance) {
  const PairingResult lhs = pair(f, hecke_divisor(n, d, d.level()));
  const PairingResult rhs = pair(hecke_image(f, n, d.level()), d);
  EvalReport r;
  r.suite = "divisor-hecke";
  r.label = f.name + " n=" + std::to_string(n) + " D=" + d.str();
  if (lhs.exact && rhs.exact) {
    r.lhs = to_string(lhs.exact_value);
    r.rhs = to_string(rhs.exact_value);
    r.tolerance = "exact";
    r.passed = lhs.exact_value == rhs.exact_value;
    return r;
  }
  const double bound = tolerance + lhs.error + rhs.error;
  const double diff = static_cast<double>(abs(lhs.value - rhs.value));
  r.lhs = format_complex(lhs.value);
  r.rhs = format_complex(rhs.value);
  std::ostringstream tol;
  tol << bound;
  r.tolerance = tol.str();
  std::ostringstream detail;
  detail << "difference " << diff;
  r.detail = detail.str();
  r.passed = diff <= bound;
  return r;
}

}  // namespace hecke
