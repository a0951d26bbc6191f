#include "hecke/niebur.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <complex>
#include <numeric>

#include "hecke/arith.hpp"
#include "hecke/error.hpp"
#include "hecke/forms.hpp"

namespace hecke {

namespace {

using std::int64_t;
using cd = std::complex<double>;

// x with x * a = 1 mod c, c >= 1.
int64_t inverse_mod(int64_t a, int64_t c) {
  if (c == 1) return 0;
  int64_t r0 = mod_floor(a, c), r1 = c, x0 = 1, x1 = 0;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
  }
  return mod_floor(x0, c);
}

double phi_double(int64_t m, double v, double s) {
  if (m == 0) return std::pow(v, s);
  return 2 * M_PI * std::sqrt(m * v) * i_bessel(s - 0.5, 2 * M_PI * m * v);
}

// int_{x0}^inf (x^2 + A^2)^{-s} dx for x0 >= 2A, by the binomial series.
double tail_integral(double x0, double a, double s) {
  double ratio = (a / x0) * (a / x0), sum = 0, binom = 1, power = 1;
  for (int k = 0; k < 60; ++k) {
    double term = binom * power * std::pow(x0, 1 - 2 * s) / (2 * s + 2 * k - 1);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    binom *= (-s - k) / (k + 1);
    power *= ratio;
  }
  return sum;
}

}  // namespace

Real i_bessel(const Real& nu, const Real& x, int digits) {
  if (x < 0) throw Error(ErrorKind::UnsupportedParameter, "I-Bessel needs x >= 0");
  if (nu <= -1) throw Error(ErrorKind::UnsupportedParameter, "I-Bessel series needs nu > -1");
  if (x > 5000) throw Error(ErrorKind::ConvergenceBudgetExceeded, "I-Bessel argument beyond the series budget");
  if (x == 0) return nu == 0 ? Real(1) : Real(0);
  const Real half = x / 2, sq = half * half;
  Real term = pow(half, nu) / boost::multiprecision::tgamma(nu + 1);
  Real sum = term;
  const Real eps = pow(Real(10), -(digits + 5));
  for (int k = 0; k < 200000; ++k) {
    term *= sq / (Real(k + 1) * (Real(k + 1) + nu));
    sum += term;
    if (Real(k) > half && term < eps * sum) return sum;
  }
  throw Error(ErrorKind::ConvergenceBudgetExceeded, "I-Bessel series did not settle");
}

double i_bessel(double nu, double x) {
  if (x == 0) return nu == 0 ? 1.0 : 0.0;
  const double half = x / 2, sq = half * half;
  double term = std::pow(half, nu) / std::tgamma(nu + 1), sum = term;
  for (int k = 0; k < 100000; ++k) {
    term *= sq / ((k + 1) * (k + 1 + nu));
    sum += term;
    if (k > half && term < 1e-17 * sum) return sum;
  }
  throw Error(ErrorKind::ConvergenceBudgetExceeded, "I-Bessel series did not settle");
}

Real phi(int64_t m, const Real& v, const Real& s, int digits) {
  if (v <= 0) throw Error(ErrorKind::UnsupportedParameter, "phi needs v > 0");
  if (m < 0) throw Error(ErrorKind::UnsupportedParameter, "phi needs m >= 0");
  if (m == 0) return pow(v, s);
  const Real x = 2 * pi_real() * Real(m) * v;
  return 2 * pi_real() * sqrt(Real(m) * v) * i_bessel(s - Real(0.5), x, digits);
}

Complex reduce_gamma0(const Complex& tau, int64_t level) {
  if (level == 1) return reduce_numeric(tau).tau;
  Complex t = tau;
  for (int iter = 0; iter < 100; ++iter) {
    Real shift = floor(real(t) + Real(0.5));
    t -= Complex(shift);
    const Real v = imag(t);
    Real best = v * (1 + pow(Real(10), -30));
    Matrix2 best_g;
    bool improved = false;
    for (int64_t c = level; c <= 6 * level; c += level)
      for (int64_t d = -6 * c; d <= 6 * c; ++d) {
        if (std::gcd(c, d) != 1) continue;
        Real norm = abs(Complex(Real(c)) * t + Complex(Real(d)));
        Real im = v / (norm * norm);
        if (im > best) {
          best = im;
          int64_t a = inverse_mod(d, c);
          best_g = Matrix2{a, (a * d - 1) / c, c, d};
          improved = true;
        }
      }
    if (!improved) break;
    t = mobius(best_g, t);
  }
  return t;
}

PointValue niebur_value(int64_t level, int64_t m, const Complex& tau, const EvalParams& params) {
  if (level < 1 || m < 0) throw Error(ErrorKind::UnsupportedParameter, "need N >= 1 and m >= 0");
  if (!(params.s > 1)) throw Error(ErrorKind::UnsupportedParameter, "only real s > 1 is supported");
  if (params.C < 1) throw Error(ErrorKind::UnsupportedParameter, "truncation C must be positive");
  if (imag(tau) <= 0) throw Error(ErrorKind::UnsupportedParameter, "tau must lie in the upper half plane");
  const Complex t = params.reduce ? reduce_gamma0(tau, level) : tau;
  const double s = params.s;
  const Real s_real(s);

  // Identity coset in full precision: it carries the exponential growth.
  const Real two_pi = 2 * pi_real();
  Complex value = Complex(phi(m, imag(t), s_real, params.digits)) *
                  exp(Complex(Real(0), -two_pi * Real(m) * real(t)));

  const double u = static_cast<double>(real(t)), v = static_cast<double>(imag(t));
  const cd tau_d(u, v);
  const double k_const =
      m == 0 ? 1.0 : 2 * M_PI * std::sqrt(double(m)) * std::pow(M_PI * m, s - 0.5) / std::tgamma(s + 0.5);
  const double kv = k_const * std::pow(v, s);
  const double line = std::sqrt(M_PI) * std::tgamma(s - 0.5) / std::tgamma(s);

  cd rest(0, 0);
  double error = 0;
  for (int64_t c = level; c <= params.C * level; c += level) {
    const double a_width = c * v;
    const double width = std::max<double>(static_cast<double>(params.window), 4 * a_width);
    const int64_t d_lo = static_cast<int64_t>(std::ceil(-c * u - width));
    const int64_t d_hi = static_cast<int64_t>(std::floor(-c * u + width));
    cd sum_c(0, 0);
    for (int64_t d = d_lo; d <= d_hi; ++d) {
      if (std::gcd(c, d) != 1) continue;
      const cd w = double(c) * tau_d + double(d);
      const double im = v / std::norm(w);
      const double re = double(inverse_mod(d, c)) / double(c) - std::real(1.0 / (double(c) * w));
      sum_c += phi_double(m, im, s) * std::exp(cd(0, -2 * M_PI * m * re));
    }
    // Residue-class tails beyond the window, phi ~ K v'^s and a first-order phase.
    for (int64_t r = 0; r < c; ++r) {
      if (std::gcd(c, r) != 1) continue;
      const cd weight = std::exp(cd(0, -2 * M_PI * m * double(inverse_mod(r, c)) / double(c)));
      const int64_t d_right = d_hi + 1 + mod_floor(r - d_hi - 1, c);
      const int64_t d_left = d_lo - 1 - mod_floor(d_lo - 1 - r, c);
      for (int side = 0; side < 2; ++side) {
        const double x0 = side == 0 ? c * u + double(d_right) : -(c * u + double(d_left));
        const double sign = side == 0 ? 1.0 : -1.0;
        const double q = x0 * x0 + a_width * a_width;
        const double g = std::pow(q, -s), dg = -2 * s * x0 * std::pow(q, -s - 1);
        const double integral = tail_integral(x0, a_width, s) / double(c);
        const double phase = 2 * M_PI * double(m) / double(c) * std::pow(q, -s) / (2 * s) / double(c);
        sum_c += weight * kv * cd(integral + g / 2 - double(c) * dg / 12, sign * phase);
        error += kv * (std::pow(double(c), 3) * 8 * s * s * s * std::pow(x0, -2 * s - 3) / 720 +
                       2 * M_PI * M_PI * double(m * m) / double(c * c) * std::pow(x0, -2 * s - 1) / (2 * s + 1) / c);
      }
    }
    rest += sum_c;
  }
  // Closed form for c beyond the truncation: each residue class sums to its integral.
  const int64_t c_max = 20 * params.C * level;
  double tail = 0;
  for (int64_t c = (params.C + 1) * level; c <= c_max; c += level) {
    const double a_width = c * v;
    const double term = kv * double(ramanujan_sum(c, m)) / double(c) * std::pow(a_width, 1 - 2 * s) * line;
    tail += term;
    error += std::abs(term) * (4 * std::exp(-2 * M_PI * v) + std::pow(2 * M_PI * m / (c * a_width), 2));
  }
  rest += tail;
  const double bound_coeff = m == 0 ? 1.0 : divisor_sigma(1, m).get_d();
  const double expo = m == 0 ? 2 - 2 * s : 1 - 2 * s;
  error += kv * line * std::pow(v, 1 - 2 * s) * bound_coeff * std::pow(double(c_max), expo) / (-expo) / level;

  value += Complex(Real(rest.real()), Real(rest.imag()));
  if (params.tolerance > 0 && error > params.tolerance)
    throw Error(ErrorKind::ConvergenceBudgetExceeded, "error estimate above the requested tolerance");
  return {value, error};
}

Complex jn_value(int64_t n, const Complex& tau, int digits) {
  if (n < 1) throw Error(ErrorKind::UnsupportedParameter, "j_n needs n >= 1");
  const Complex t = reduce_numeric(tau).tau;
  const double v = static_cast<double>(imag(t));
  const double target = (digits + 5) * std::log(10.0);
  int64_t terms = 1;
  while (4 * M_PI * std::sqrt(double(n * terms)) - 2 * M_PI * v * double(terms) > -target) ++terms;
  return eval_series(jn(n, terms + 4), t, digits);
}

QSeries harmonic_slice(int64_t level, int64_t m, int64_t prec) {
  if (m < 1) throw Error(ErrorKind::UnsupportedParameter, "harmonic slice needs m >= 1");
  const QSeries t = level == 1 ? j_invariant(prec + m + 1) : hauptmodul(level, prec + m + 1);
  std::vector<QSeries> powers{QSeries::monomial(Rational(1), 0, prec + m)};
  for (int64_t k = 1; k <= m; ++k) powers.push_back(powers.back() * t);
  QSeries f = powers[static_cast<std::size_t>(m)];
  for (int64_t k = m - 1; k >= 0; --k) {
    const Rational c = f.coeff(-k);
    if (c != 0) f = f - powers[static_cast<std::size_t>(k)] * c;
  }
  return f.truncated(prec);
}

}  // namespace hecke
