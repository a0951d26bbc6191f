#include "hecke/numeric.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "hecke/forms.hpp"

namespace hecke {

namespace {

template <class Cx>
struct RealOf;
template <>
struct RealOf<std::complex<double>> {
  using type = double;
};
template <>
struct RealOf<Complex> {
  using type = Real;
};

template <class Cx>
using real_t = typename RealOf<Cx>::type;

template <class Cx>
real_t<Cx> pi_of() {
  return boost::math::constants::pi<real_t<Cx>>();
}

template <class Cx>
Cx make(const real_t<Cx>& re, const real_t<Cx>& im) {
  return Cx(re, im);
}

template <class Cx>
Cx mobius_t(const Matrix2& m, const Cx& tau) {
  using R = real_t<Cx>;
  return (Cx(R(m.a)) * tau + Cx(R(m.b))) / (Cx(R(m.c)) * tau + Cx(R(m.d)));
}

template <class Cx>
NumericReduction reduce_t(Cx& tau, Matrix2& g) {
  using R = real_t<Cx>;
  using std::floor;
  for (int iter = 0; iter < 10000; ++iter) {
    R x = real(tau);
    long long n = static_cast<long long>(floor(static_cast<double>(x + R(0.5))));
    if (n != 0) {
      tau -= Cx(R(n));
      g = Matrix2{1, -n, 0, 1} * g;
    }
    R n2 = norm(tau);
    if (n2 < R(1) || (n2 == R(1) && real(tau) > R(0))) {
      tau = Cx(R(-1)) / tau;
      g = Matrix2{0, -1, 1, 0} * g;
      continue;
    }
    break;
  }
  return {};
}

// q^{1/24} prod (1 - q^n) for Im tau bounded below, by the pentagonal series.
template <class Cx>
Cx eta_direct(const Cx& tau) {
  using R = real_t<Cx>;
  using std::exp;
  const R twopi = 2 * pi_of<Cx>();
  const Cx iunit = make<Cx>(R(0), R(1));
  const Cx q = exp(iunit * Cx(twopi) * tau);
  const R eps = std::numeric_limits<R>::epsilon();
  Cx sum = Cx(R(1));
  for (long k = 1;; ++k) {
    // exponents k(3k-1)/2 and k(3k+1)/2
    Cx t1 = exp(iunit * Cx(twopi * R(k * (3 * k - 1) / 2)) * tau);
    Cx t2 = exp(iunit * Cx(twopi * R(k * (3 * k + 1) / 2)) * tau);
    Cx term = t1 + t2;
    if (k % 2) sum -= term;
    else sum += term;
    if (abs(t1) < eps * R(1e-3)) break;
    if (k > 100000) break;
  }
  (void)q;
  return exp(iunit * Cx(twopi / 24) * tau) * sum;
}

template <class Cx>
Cx eta_t(Cx tau) {
  using R = real_t<Cx>;
  using std::exp;
  using std::floor;
  using std::sqrt;
  const Cx iunit = make<Cx>(R(0), R(1));
  Cx factor = Cx(R(1));
  for (int iter = 0; iter < 10000; ++iter) {
    if (imag(tau) >= R(0.5)) return factor * eta_direct(tau);
    R x = real(tau);
    long long n = static_cast<long long>(floor(static_cast<double>(x + R(0.5))));
    if (n != 0) {
      // eta(tau) = e^{pi i n/12} eta(tau - n)
      factor *= exp(iunit * Cx(pi_of<Cx>() * R(n) / 12));
      tau -= Cx(R(n));
    }
    if (imag(tau) >= R(0.5)) return factor * eta_direct(tau);
    // eta(tau) = eta(-1/tau) / sqrt(-i tau)
    factor /= sqrt(-iunit * tau);
    tau = Cx(R(-1)) / tau;
  }
  throw Error(ErrorKind::ConvergenceBudgetExceeded, "eta reduction did not terminate");
}

// E4, E6 at a reduced point.
template <class Cx>
void e4_e6(const Cx& tau, Cx& e4, Cx& e6) {
  using R = real_t<Cx>;
  using std::exp;
  const Cx iunit = make<Cx>(R(0), R(1));
  const Cx q = exp(iunit * Cx(2 * pi_of<Cx>()) * tau);
  const R eps = std::numeric_limits<R>::epsilon();
  Cx s3 = Cx(R(0)), s5 = Cx(R(0)), qn = q;
  for (long n = 1; n < 100000; ++n) {
    R sig3 = 0, sig5 = 0;
    for (long d = 1; d * d <= n; ++d) {
      if (n % d) continue;
      long e = n / d;
      sig3 += R(d) * d * d;
      sig5 += R(d) * d * d * d * d;
      if (e != d) {
        sig3 += R(e) * e * e;
        sig5 += R(e) * e * e * e * e;
      }
    }
    s3 += Cx(sig3) * qn;
    s5 += Cx(sig5) * qn;
    if (abs(qn) * sig5 < eps * R(1e-6)) break;
    qn *= q;
  }
  e4 = Cx(R(1)) + Cx(R(240)) * s3;
  e6 = Cx(R(1)) - Cx(R(504)) * s5;
}

// j and dj/dtau at any point (reduced internally; derivative transported back).
template <class Cx>
void j_and_derivative(const Cx& tau_in, Cx& j, Cx& dj) {
  using R = real_t<Cx>;
  Cx tau = tau_in;
  Matrix2 g;
  reduce_t(tau, g);
  Cx e4, e6;
  e4_e6(tau, e4, e6);
  const Cx e43 = e4 * e4 * e4;
  j = Cx(R(1728)) * e43 / (e43 - e6 * e6);
  // dj/dtau = -2 pi i E6 j / E4 at the reduced point, then chain rule:
  // d(g tau)/dtau = 1/(c tau + d)^2.
  const Cx iunit = make<Cx>(R(0), R(1));
  if (abs(e4) == R(0)) {
    dj = Cx(R(0));
    return;
  }
  Cx djr = -Cx(2 * pi_of<Cx>()) * iunit * e6 * j / e4;
  Cx denom = Cx(R(g.c)) * tau_in + Cx(R(g.d));
  dj = djr / (denom * denom);
}

template <class Cx>
Cx hauptmodul_t(std::int64_t level, const Cx& tau) {
  using R = real_t<Cx>;
  const std::int64_t r = 24 / (level - 1);
  Cx ratio = eta_t(tau) / eta_t(Cx(R(level)) * tau);
  Cx out = Cx(R(1));
  for (std::int64_t i = 0; i < r; ++i) out *= ratio;
  return out;
}

}  // namespace

Real pi_real() { return boost::math::constants::pi<Real>(); }

Complex to_complex(const Real& re, const Real& im) { return Complex(re, im); }

Real rational_to_real(const Rational& r) {
  return Real(r.get_num().get_str()) / Real(r.get_den().get_str());
}

std::complex<double> to_double(const Complex& z) {
  return {static_cast<double>(real(z)), static_cast<double>(imag(z))};
}

Complex mobius(const Matrix2& m, const Complex& tau) { return mobius_t(m, tau); }

NumericReduction reduce_numeric(const Complex& tau) {
  Complex t = tau;
  Matrix2 g;
  reduce_t(t, g);
  return {t, g};
}

Complex eta(const Complex& tau) {
  if (imag(tau) <= 0) throw Error(ErrorKind::UnsupportedParameter, "eta needs Im tau > 0");
  return eta_t(tau);
}

Complex j_value(const Complex& tau) {
  if (imag(tau) <= 0) throw Error(ErrorKind::UnsupportedParameter, "j needs Im tau > 0");
  Complex j, dj;
  j_and_derivative(tau, j, dj);
  return j;
}

Complex hauptmodul_value(std::int64_t level, const Complex& tau) {
  hauptmodul_spec(level);
  return hauptmodul_t(level, tau);
}

Complex eval_series(const QSeries& f, const Complex& tau, int digits) {
  if (f.den() != 1) throw Error(ErrorKind::NotIntegralSeries, "evaluation needs integral exponents");
  const Complex iunit(Real(0), Real(1));
  const Complex q = exp(iunit * Complex(2 * pi_real()) * tau);
  Complex sum(Real(0)), qm = exp(iunit * Complex(2 * pi_real() * Real(f.order())) * tau);
  Real tail = 0;
  const std::int64_t n = static_cast<std::int64_t>(f.coeffs().size());
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& c = f.coeffs()[static_cast<std::size_t>(i)];
    Complex term = is_zero(c) ? Complex(Real(0)) : Complex(rational_to_real(c)) * qm;
    sum += term;
    if (i >= n - 4) tail = std::max(tail, Real(abs(term)));
    qm *= q;
  }
  Real scale = std::max(Real(1), Real(abs(sum)));
  if (tail > scale * pow(Real(10), -digits))
    throw Error(ErrorKind::PrecisionExhausted,
                "q-expansion truncated too early for " + std::to_string(digits) + " digits");
  return sum;
}

Complex j_inverse(const Complex& value) {
  const Real small = pow(Real(10), -60);
  const Complex iunit(Real(0), Real(1));
  const Complex omega(Real(-0.5), sqrt(Real(3)) / 2);
  if (abs(value) < small) return omega;
  if (abs(value - Complex(Real(1728))) < small) return iunit;
  // Coarse start in double precision over the fundamental domain.
  const std::complex<double> target = to_double(value);
  std::complex<double> best(0.0, 1.0);
  double best_err = std::numeric_limits<double>::infinity();
  auto try_point = [&](std::complex<double> t) {
    std::complex<double> j, dj;
    j_and_derivative(t, j, dj);
    double err = std::abs(j - target) / std::max(1.0, std::abs(target));
    if (err < best_err) best_err = err, best = t;
  };
  if (std::abs(target) > 5000.0) {
    std::complex<double> q = 1.0 / (target - 744.0);
    std::complex<double> t = std::log(q) / std::complex<double>(0.0, 2.0 * M_PI);
    if (t.imag() > 0) try_point(t);
  }
  for (int ix = 0; ix <= 40; ++ix)
    for (int iy = 0; iy <= 40; ++iy) {
      double x = -0.5 + ix / 40.0;
      double y = std::sqrt(std::max(0.0, 1.0 - x * x)) + iy * 0.05;
      try_point({x, y});
    }
  Complex tau(Real(best.real()), Real(best.imag()));
  const Real tol = pow(Real(10), -90) * std::max(Real(1), Real(abs(value)));
  for (int iter = 0; iter < 400; ++iter) {
    Complex j, dj;
    j_and_derivative(tau, j, dj);
    Complex err = j - value;
    if (abs(err) < tol) break;
    if (abs(dj) == 0) break;
    Complex step = err / dj;
    Complex next = tau - step;
    while (imag(next) <= 0) {
      step /= Complex(Real(2));
      next = tau - step;
    }
    tau = next;
  }
  Complex j = j_value(tau);
  if (abs(j - value) > pow(Real(10), -40) * std::max(Real(1), Real(abs(value))))
    throw Error(ErrorKind::ConvergenceBudgetExceeded, "j inversion did not converge");
  return reduce_numeric(tau).tau;
}

Complex hauptmodul_inverse(std::int64_t level, const Complex& value) {
  hauptmodul_spec(level);
  const std::complex<double> target = to_double(value);
  std::vector<std::pair<double, std::complex<double>>> seeds;
  // Seeds: translates of a grid in the fundamental domain by cosets of Gamma_0(N).
  std::vector<Matrix2> cosets;
  for (std::int64_t c = 0; c < level; ++c)
    for (std::int64_t d = 0; d < level; ++d) {
      if (std::gcd(std::gcd(c, d), level) != 1) continue;
      std::int64_t cc = c == 0 ? level : c, dd = d;
      while (std::gcd(cc, dd) != 1) dd += level;
      // complete (a b; cc dd) to SL_2(Z)
      std::int64_t a = 0, b = 0;
      {
        std::int64_t old_r = cc, r = dd, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r) {
          std::int64_t qq = old_r / r;
          std::tie(old_r, r) = std::make_pair(r, old_r - qq * r);
          std::tie(old_s, s) = std::make_pair(s, old_s - qq * s);
          std::tie(old_t, t) = std::make_pair(t, old_t - qq * t);
        }
        // old_s*cc + old_t*dd = 1 -> a = old_t, b = -old_s
        a = old_t;
        b = -old_s;
      }
      cosets.push_back({a, b, cc, dd});
    }
  for (const auto& g : cosets)
    for (int ix = 0; ix <= 8; ++ix)
      for (int iy = 0; iy <= 6; ++iy) {
        double x = -0.5 + ix / 8.0;
        double y = std::sqrt(std::max(0.0, 1.0 - x * x)) + 0.02 + iy * 0.25;
        std::complex<double> t = mobius_t(g, std::complex<double>(x, y));
        std::complex<double> v = hauptmodul_t(level, t);
        double err = std::abs(v - target) / std::max(1.0, std::abs(target));
        if (std::isfinite(err)) seeds.emplace_back(err, t);
      }
  std::sort(seeds.begin(), seeds.end(), [](auto& x, auto& y) { return x.first < y.first; });
  const Real tol = pow(Real(10), -85) * std::max(Real(1), Real(abs(value)));
  const Real h = pow(Real(10), -40);
  for (std::size_t s = 0; s < std::min<std::size_t>(seeds.size(), 12); ++s) {
    Complex tau(Real(seeds[s].second.real()), Real(seeds[s].second.imag()));
    bool ok = false;
    for (int iter = 0; iter < 200; ++iter) {
      Complex v = hauptmodul_t(level, tau) - value;
      if (abs(v) < tol) {
        ok = true;
        break;
      }
      Complex hc(h);
      Complex deriv = (hauptmodul_t(level, tau + hc) - hauptmodul_t(level, tau - hc)) / Complex(2 * h);
      if (abs(deriv) == 0) break;
      Complex step = v / deriv;
      Complex next = tau - step;
      int halvings = 0;
      while (imag(next) <= 0 && halvings < 60) {
        step /= Complex(Real(2));
        next = tau - step;
        ++halvings;
      }
      if (imag(next) <= 0) break;
      tau = next;
    }
    if (ok || abs(hauptmodul_t(level, tau) - value) < pow(Real(10), -40) * std::max(Real(1), Real(abs(value))))
      return tau;
  }
  throw Error(ErrorKind::ConvergenceBudgetExceeded, "Hauptmodul inversion did not converge");
}

bool recognize_quadratic(const Complex& tau, std::int64_t max_a, int tol_digits, std::int64_t out[3]) {
  const Real x = real(tau), n2 = norm(tau);
  const Real tol = pow(Real(10), -tol_digits);
  for (std::int64_t a = 1; a <= max_a; ++a) {
    Real bx = -2 * Real(a) * x, cx = Real(a) * n2;
    Real br = round(bx), cr = round(cx);
    if (abs(bx - br) > tol * a || abs(cx - cr) > tol * a * (1 + n2)) continue;
    std::int64_t b = static_cast<std::int64_t>(br), c = static_cast<std::int64_t>(cr);
    if (b * b - 4 * a * c >= 0) continue;
    if (std::gcd(std::gcd(a, std::llabs(b)), std::llabs(c)) != 1) continue;
    Complex r = Complex(Real(a)) * tau * tau + Complex(Real(b)) * tau + Complex(Real(c));
    if (abs(r) > tol * a * (1 + n2)) continue;
    out[0] = a, out[1] = b, out[2] = c;
    return true;
  }
  return false;
}

namespace {

using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

QPoly qderiv(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  qtrim(d);
  return d;
}

void qdivmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  qtrim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  while (r.size() >= b.size() && !r.empty()) {
    Rational f = r.back() / b.back();
    std::size_t shift = r.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    r.pop_back();
    qtrim(r);
  }
  qtrim(q);
}

QPoly qmonic(QPoly p) {
  qtrim(p);
  Rational l = p.back();
  for (auto& c : p) c /= l;
  return p;
}

QPoly qgcd(QPoly a, QPoly b) {
  qtrim(a);
  qtrim(b);
  while (!b.empty()) {
    QPoly q, r;
    qdivmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return qmonic(a);
}

QPoly qdiv(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  qdivmod(a, b, q, r);
  return q;
}

Complex peval(const std::vector<Complex>& p, const Complex& z) {
  Complex acc(Real(0));
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
  return acc;
}

std::vector<Complex> aberth(const QPoly& monic) {
  const std::size_t deg = monic.size() - 1;
  std::vector<Complex> p, dp;
  for (const auto& c : monic) p.emplace_back(rational_to_real(c));
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * Complex(Real(static_cast<long>(i))));
  Real radius = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) radius = std::max(radius, Real(abs(p[i])));
  radius += 1;
  std::vector<Complex> z(deg);
  for (std::size_t k = 0; k < deg; ++k) {
    Real ang = 2 * pi_real() * Real(static_cast<long>(k)) / Real(static_cast<long>(deg)) + Real(0.4);
    z[k] = Complex(radius * cos(ang), radius * sin(ang)) * Complex(Real(0.5));
  }
  const Real tol = pow(Real(10), -95);
  for (int iter = 0; iter < 2000; ++iter) {
    Real maxstep = 0;
    for (std::size_t k = 0; k < deg; ++k) {
      Complex ratio = peval(p, z[k]) / peval(dp, z[k]);
      Complex sum(Real(0));
      for (std::size_t m = 0; m < deg; ++m)
        if (m != k) sum += Complex(Real(1)) / (z[k] - z[m]);
      Complex w = ratio / (Complex(Real(1)) - ratio * sum);
      z[k] -= w;
      maxstep = std::max(maxstep, Real(abs(w) / std::max(Real(1), Real(abs(z[k])))));
    }
    if (maxstep < tol) break;
  }
  return z;
}

// Continued-fraction candidates for a rational close to x.
std::vector<Rational> rational_candidates(const Real& x) {
  std::vector<Rational> out;
  Real r = x;
  BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int i = 0; i < 40; ++i) {
    Real a = floor(r);
    BigInt ai(a.convert_to<boost::multiprecision::cpp_int>().str());
    BigInt h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    out.push_back(ratio(h2, k2));
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    Real frac = r - a;
    if (frac < pow(Real(10), -80)) break;
    r = 1 / frac;
    if (abs(k2) > BigInt("1000000000000")) break;
  }
  return out;
}

Rational qeval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

}  // namespace

std::vector<PolynomialRoot> polynomial_roots(const std::vector<Rational>& coeffs) {
  QPoly p = coeffs;
  qtrim(p);
  if (p.size() <= 1) return {};
  p = qmonic(p);
  // Yun's square-free decomposition.
  std::vector<std::pair<QPoly, int>> parts;
  QPoly dp = qderiv(p);
  QPoly a = qgcd(p, dp);
  QPoly b = qdiv(p, a), c = qdiv(dp, a);
  {
    QPoly db = qderiv(b);
    QPoly d = c;
    for (std::size_t i = 0; i < std::max(db.size(), d.size()); ++i) {
      if (i >= d.size()) d.push_back(Rational(0));
      if (i < db.size()) d[i] -= db[i];
    }
    qtrim(d);
    int mult = 1;
    while (b.size() > 1) {
      QPoly g = d.empty() ? b : qgcd(b, d);
      if (g.size() > 1) parts.emplace_back(g, mult);
      b = qdiv(b, g);
      c = d.empty() ? QPoly{} : qdiv(d, g);
      QPoly dbb = qderiv(b);
      d = c;
      for (std::size_t i = 0; i < std::max(dbb.size(), d.size()); ++i) {
        if (i >= d.size()) d.push_back(Rational(0));
        if (i < dbb.size()) d[i] -= dbb[i];
      }
      qtrim(d);
      ++mult;
    }
  }
  std::vector<PolynomialRoot> roots;
  for (auto& [factor, mult] : parts) {
    for (auto& z : aberth(qmonic(factor))) {
      PolynomialRoot root{z, mult, false, Rational(0)};
      if (abs(imag(z)) < pow(Real(10), -40) * std::max(Real(1), Real(abs(z)))) {
        for (const auto& cand : rational_candidates(real(z)))
          if (qeval(factor, cand) == 0) {
            root.rational = true;
            root.exact = cand;
            root.value = Complex(rational_to_real(cand));
            break;
          }
      }
      roots.push_back(root);
    }
  }
  return roots;
}

}  // namespace hecke
