#include "hecke/curve.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "hecke/arith.hpp"
#include "hecke/error.hpp"

namespace hecke {

namespace {

using std::int64_t;

const Matrix2 kS{0, -1, 1, 0};
const Matrix2 kU{0, -1, 1, 1};

// Elements of the stabiliser of a reduced point in PSL_2(Z).
std::vector<Matrix2> stabiliser(const HeegnerPoint& reduced) {
  if (reduced == HeegnerPoint{1, 0, 1}) return {Matrix2{}, kS};
  if (reduced == HeegnerPoint{1, 1, 1}) return {Matrix2{}, kU, kU * kU};
  return {Matrix2{}};
}

std::string coeff_prefix(const Rational& c, bool first) {
  std::string out;
  Rational a = c;
  if (a < 0) {
    out = first ? "-" : " - ";
    a = -a;
  } else if (!first) {
    out = " + ";
  }
  if (a != 1) out += a.get_den() == 1 ? a.get_num().get_str() : "(" + to_string(a) + ")";
  return out;
}

std::vector<P1Label> p1_list(int64_t level) {
  std::set<P1Label> labels;
  for (int64_t c = 0; c < level; ++c)
    for (int64_t d = 0; d < level; ++d)
      if (std::gcd(std::gcd(c, d), level) == 1) labels.insert(p1_label(c, d, level));
  if (level == 1) labels.insert(P1Label{0, 0});
  return {labels.begin(), labels.end()};
}

// Solves a d - b c = 1 for given coprime (a, c); returns (b, d).
std::pair<int64_t, int64_t> complete_column(int64_t a, int64_t c) {
  // Extended Euclid on (a, c): x a + y c = 1, then d = x, b = -y.
  int64_t r0 = a, r1 = c, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  if (r0 < 0) x0 = -x0, y0 = -y0;
  return {-y0, x0};
}

bool close(const Complex& x, const Complex& y, const Real& tol) { return abs(x - y) < tol; }

const Real& numeric_tolerance() {
  static const Real tol = pow(Real(10), -20);
  return tol;
}

}  // namespace

Complex HeegnerPoint::value() const {
  Real sq = sqrt(Real(-disc()));
  return to_complex(Real(-B) / Real(2 * A), sq / Real(2 * A));
}

std::string HeegnerPoint::str() const {
  return "[" + std::to_string(A) + "," + std::to_string(B) + "," + std::to_string(C) + "]";
}

HeegnerPoint make_point(int64_t A, int64_t B, int64_t C) {
  if (B * B - 4 * A * C >= 0)
    throw Error(ErrorKind::UnsupportedParameter, "quadratic form is not positive or negative definite");
  int64_t g = std::gcd(std::gcd(A, B), C);
  if (A < 0) g = -g;
  return {A / g, B / g, C / g};
}

HeegnerPoint act_matrix(const Matrix2& m, const HeegnerPoint& z) {
  if (m.det() <= 0) throw Error(ErrorKind::UnsupportedParameter, "matrix needs positive determinant");
  const int64_t A = z.A, B = z.B, C = z.C;
  return make_point(A * m.d * m.d - B * m.d * m.c + C * m.c * m.c,
                    -2 * A * m.b * m.d + B * (m.a * m.d + m.b * m.c) - 2 * C * m.a * m.c,
                    A * m.b * m.b - B * m.a * m.b + C * m.a * m.a);
}

PointReduction reduce_level1(const HeegnerPoint& z) {
  HeegnerPoint f = make_point(z.A, z.B, z.C);
  Matrix2 g;
  for (;;) {
    // Translate so that -A < B <= A: tau -> tau + k sends B to B - 2Ak.
    const int64_t two_a = 2 * f.A, num = f.A - f.B;
    const int64_t k = -((num - mod_floor(num, two_a)) / two_a);
    if (k != 0) {
      Matrix2 t{1, k, 0, 1};
      f = act_matrix(t, f);
      g = t * g;
    }
    if (f.A > f.C || (f.A == f.C && f.B < 0)) {
      f = act_matrix(kS, f);
      g = kS * g;
      continue;
    }
    break;
  }
  return {f, g};
}

P1Label p1_label(int64_t c, int64_t d, int64_t level) {
  if (level == 1) return {0, 0};
  c = mod_floor(c, level);
  d = mod_floor(d, level);
  P1Label best{level, level};
  for (int64_t u = 1; u < level; ++u) {
    if (std::gcd(u, level) != 1) continue;
    P1Label cand{(u * c) % level, (u * d) % level};
    best = std::min(best, cand);
  }
  return best;
}

Matrix2 lift_label(const P1Label& label, int64_t level) {
  if (level == 1) return Matrix2{};
  int64_t c = label.c == 0 ? level : label.c;
  int64_t d = label.d;
  while (std::gcd(c, d) != 1) d += level;
  auto [b, a] = complete_column(d, c);
  return Matrix2{a, b, c, d};
}

CMKey canonical_key(const HeegnerPoint& z, int64_t level) {
  PointReduction r = reduce_level1(z);
  Matrix2 delta = r.witness.adjugate();  // delta reduced = z
  P1Label best{level + 1, level + 1};
  for (const Matrix2& s : stabiliser(r.form)) {
    Matrix2 ds = delta * s;
    best = std::min(best, p1_label(ds.c, ds.d, level));
  }
  return {r.form, best};
}

HeegnerPoint key_point(const CMKey& key, int64_t level) {
  return act_matrix(lift_label(key.label, level), key.reduced);
}

CanonicalPoint reduce_point(const HeegnerPoint& z, int64_t level) {
  PointReduction r = reduce_level1(z);
  if (level == 1) return {r.form, r.witness};
  Matrix2 delta = r.witness.adjugate();
  P1Label best{level + 1, level + 1};
  Matrix2 best_s;
  for (const Matrix2& s : stabiliser(r.form)) {
    Matrix2 ds = delta * s;
    P1Label l = p1_label(ds.c, ds.d, level);
    if (l < best) best = l, best_s = s;
  }
  Matrix2 lift = lift_label(best, level);
  Matrix2 witness = lift * best_s.adjugate() * r.witness;
  return {act_matrix(lift, r.form), witness};
}

int period(const HeegnerPoint& z, int64_t level) {
  CMKey key = canonical_key(z, level);
  Matrix2 lift = lift_label(key.label, level);
  int count = 0;
  for (const Matrix2& s : stabiliser(key.reduced)) {
    Matrix2 ls = lift * s;
    if (p1_label(ls.c, ls.d, level) == key.label) ++count;
  }
  return count;
}

std::string CuspInfo::str() const {
  if (den == 0) return "inf";
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

P1Label cusp_key(int64_t num, int64_t den, int64_t level) {
  if (den == 0) return infinity_cusp(level);
  int64_t g = std::gcd(num, den);
  num /= g, den /= g;
  if (den < 0) num = -num, den = -den;
  auto [b, d] = complete_column(num, den);
  (void)b;
  P1Label best{level + 1, level + 1};
  for (int64_t t = 0; t < level; ++t) best = std::min(best, p1_label(den, d + t * den, level));
  return best;
}

P1Label infinity_cusp(int64_t level) { return p1_label(0, 1, level); }

std::vector<CuspInfo> cusps(int64_t level) {
  if (level < 1) throw Error(ErrorKind::UnsupportedParameter, "level must be positive");
  static std::mutex mu;
  static std::map<int64_t, std::vector<CuspInfo>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(level);
  if (it != cache.end()) return it->second;

  auto width_of = [&](int64_t num, int64_t den) {
    if (den == 0) return int64_t{1};
    auto [b, d] = complete_column(num, den);
    (void)b;
    std::set<P1Label> orbit;
    for (int64_t t = 0; t < level; ++t) orbit.insert(p1_label(den, d + t * den, level));
    return static_cast<int64_t>(orbit.size());
  };

  std::vector<CuspInfo> out;
  std::set<P1Label> seen;
  P1Label inf = infinity_cusp(level);
  out.push_back({inf, 1, 0, 1});
  seen.insert(inf);
  for (int64_t den : divisors(level)) {
    if (den == level) continue;
    for (int64_t num = den == 1 ? 0 : 1; num < std::max<int64_t>(den, 1); ++num) {
      if (std::gcd(num, den) != 1) continue;
      P1Label key = cusp_key(num, den, level);
      if (!seen.insert(key).second) continue;
      out.push_back({key, num, den, width_of(num, den)});
    }
  }
  cache[level] = out;
  return out;
}

CuspInfo cusp_info(const P1Label& key, int64_t level) {
  for (const CuspInfo& c : cusps(level))
    if (c.key == key) return c;
  throw Error(ErrorKind::UnsupportedParameter, "unknown cusp class");
}

void Divisor::add_key(const CMKey& key, const Rational& coeff) {
  if (coeff == 0) return;
  Rational& slot = interior_[key];
  slot += coeff;
  if (slot == 0) interior_.erase(key);
}

void Divisor::add_point(const HeegnerPoint& z, const Rational& coeff) { add_key(canonical_key(z, level_), coeff); }

void Divisor::add_cusp(const P1Label& key, const Rational& coeff) {
  if (coeff == 0) return;
  Rational& slot = cusps_[key];
  slot += coeff;
  if (slot == 0) cusps_.erase(key);
}

void Divisor::add_fiber(const FiberKey& key, const Rational& coeff) {
  if (coeff == 0) return;
  Rational& slot = fibers_[key];
  slot += coeff;
  if (slot == 0) fibers_.erase(key);
}

void Divisor::add_numeric_reduced(const Complex& tau, const P1Label& label, const Rational& coeff) {
  if (coeff == 0) return;
  for (auto it = numeric_.begin(); it != numeric_.end(); ++it) {
    if (it->label == label && close(it->tau, tau, numeric_tolerance())) {
      it->coeff += coeff;
      if (it->coeff == 0) numeric_.erase(it);
      return;
    }
  }
  numeric_.push_back({tau, label, coeff});
}

void Divisor::add_numeric(const Complex& tau, const Rational& coeff) {
  ResolvedPoint r = resolve_location(tau, level_);
  if (r.cm)
    add_key(r.key, coeff);
  else
    add_numeric_reduced(r.tau, r.label, coeff);
}

Rational Divisor::coefficient(const HeegnerPoint& z) const {
  auto it = interior_.find(canonical_key(z, level_));
  return it == interior_.end() ? Rational(0) : it->second;
}

Rational Divisor::cusp_coefficient(const P1Label& key) const {
  auto it = cusps_.find(key);
  return it == cusps_.end() ? Rational(0) : it->second;
}

Rational Divisor::infinity_coefficient() const { return cusp_coefficient(infinity_cusp(level_)); }

Rational Divisor::degree() const {
  Rational sum = 0;
  for (const auto& [k, c] : interior_) sum += c;
  for (const auto& [k, c] : cusps_) sum += c;
  for (const auto& p : numeric_) sum += p.coeff;
  for (const auto& [k, c] : fibers_)
    sum += c * Rational(gamma0_index(level_)) / Rational(gamma0_index(k.hauptmodul_level));
  return sum;
}

Divisor Divisor::operator+(const Divisor& rhs) const {
  if (rhs.level_ != level_) throw Error(ErrorKind::UnsupportedParameter, "divisors live on different levels");
  Divisor out = *this;
  for (const auto& [k, c] : rhs.interior_) out.add_key(k, c);
  for (const auto& [k, c] : rhs.cusps_) out.add_cusp(k, c);
  for (const auto& [k, c] : rhs.fibers_) out.add_fiber(k, c);
  for (const auto& p : rhs.numeric_) out.add_numeric_reduced(p.tau, p.label, p.coeff);
  return out;
}

Divisor Divisor::without_fibers() const {
  Divisor out = *this;
  out.fibers_.clear();
  return out;
}

Divisor Divisor::operator*(const Rational& s) const {
  Divisor out(level_);
  if (s == 0) return out;
  out = *this;
  for (auto& [k, c] : out.interior_) c *= s;
  for (auto& [k, c] : out.cusps_) c *= s;
  for (auto& [k, c] : out.fibers_) c *= s;
  for (auto& p : out.numeric_) p.coeff *= s;
  return out;
}

bool Divisor::operator==(const Divisor& rhs) const {
  if (level_ != rhs.level_ || interior_ != rhs.interior_ || cusps_ != rhs.cusps_ || fibers_ != rhs.fibers_)
    return false;
  if (numeric_.size() != rhs.numeric_.size()) return false;
  for (const auto& p : numeric_) {
    bool found = false;
    for (const auto& q : rhs.numeric_)
      if (p.label == q.label && p.coeff == q.coeff && close(p.tau, q.tau, numeric_tolerance())) found = true;
    if (!found) return false;
  }
  return true;
}

std::string Divisor::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& point) {
    os << coeff_prefix(c, first) << "[" << point << "]";
    first = false;
  };
  for (const auto& [k, c] : interior_) {
    HeegnerPoint p = key_point(k, level_);
    emit(c, std::to_string(p.A) + "," + std::to_string(p.B) + "," + std::to_string(p.C));
  }
  for (const auto& [k, c] : fibers_)
    emit(c, (k.hauptmodul_level == 1 ? std::string("j") : "t" + std::to_string(k.hauptmodul_level)) + "=" +
                (k.c.get_den() == 1 ? k.c.get_num().get_str() : to_string(k.c)));
  for (const auto& p : numeric_) {
    auto z = to_double(mobius(lift_label(p.label, level_), p.tau));
    std::ostringstream pt;
    pt.precision(12);
    pt << "~" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    emit(p.coeff, pt.str());
  }
  for (const CuspInfo& info : cusps(level_)) {
    auto it = cusps_.find(info.key);
    if (it != cusps_.end()) emit(it->second, info.str());
  }
  if (first) return "0";
  return os.str();
}

ResolvedPoint resolve_location(const Complex& tau, int64_t level) {
  NumericReduction red = reduce_numeric(tau);
  Matrix2 delta = red.witness.adjugate();
  int64_t f[3];
  if (recognize_quadratic(red.tau, 10000, 60, f)) {
    HeegnerPoint z = act_matrix(delta, make_point(f[0], f[1], f[2]));
    return {true, canonical_key(z, level), red.tau, {}};
  }
  return {false, {}, red.tau, p1_label(delta.c, delta.d, level)};
}

bool rational_cm_point(const Rational& c, HeegnerPoint& out) {
  static const std::vector<std::pair<const char*, HeegnerPoint>> table = {
      {"0", {1, 1, 1}},
      {"1728", {1, 0, 1}},
      {"-3375", {1, 1, 2}},
      {"8000", {1, 0, 2}},
      {"-32768", {1, 1, 3}},
      {"54000", {1, 0, 3}},
      {"287496", {1, 0, 4}},
      {"-884736", {1, 1, 5}},
      {"-12288000", {1, 1, 7}},
      {"16581375", {1, 0, 7}},
      {"-884736000", {1, 1, 11}},
      {"-147197952000", {1, 1, 17}},
      {"-262537412640768000", {1, 1, 41}},
  };
  for (const auto& [text, point] : table)
    if (Rational(BigInt(text)) == c) {
      out = point;
      return true;
    }
  return false;
}

Complex hauptmodul_cusp_value(int64_t level, const P1Label& cusp) {
  CuspInfo info = cusp_info(cusp, level);
  if (info.den == 0) throw Error(ErrorKind::UnsupportedParameter, "the Hauptmodul has its pole at infinity");
  auto [b, d] = complete_column(info.num, info.den);
  Matrix2 gamma{info.num, b, info.den, d};
  Complex tau = to_complex(Real("0.1234"), Real(25 * info.width));
  return hauptmodul_value(level, mobius(gamma, tau));
}

Divisor resolve_fibers(const Divisor& d) {
  if (d.fibers().empty()) return d;
  Divisor out = d.without_fibers();
  for (const auto& [k, c] : d.fibers()) {
    Divisor base(k.hauptmodul_level);
    Complex tau = k.hauptmodul_level == 1 ? j_inverse(Complex(rational_to_real(k.c)))
                                          : hauptmodul_inverse(k.hauptmodul_level, Complex(rational_to_real(k.c)));
    base.add_numeric(tau, c);
    out = out + lift_divisor(base, d.level());
  }
  return out;
}

namespace {

void add_images(Divisor& out, const Divisor& d, const std::vector<Matrix2>& reps, int64_t mult) {
  const int64_t level = d.level();
  const Rational m(mult);
  for (const auto& [k, c] : d.interior()) {
    HeegnerPoint z = key_point(k, level);
    for (const Matrix2& a : reps) out.add_point(act_matrix(a, z), c * m);
  }
  for (const auto& p : d.numeric()) {
    Complex z = mobius(lift_label(p.label, level), p.tau);
    for (const Matrix2& a : reps) out.add_numeric(mobius(a, z), p.coeff * m);
  }
  for (const auto& [k, c] : d.cusp_part()) {
    CuspInfo info = cusp_info(k, level);
    for (const Matrix2& a : reps) {
      if (info.den == 0) {
        out.add_cusp(infinity_cusp(level), c * m);
        continue;
      }
      // Upper-triangular a: num/den -> (a num + b den) / (d den).
      int64_t num = a.a * info.num + a.b * info.den, den = a.d * info.den;
      out.add_cusp(cusp_key(num, den, level), c * m);
    }
  }
}

}  // namespace

Divisor hecke_divisor(int64_t n, const Divisor& d, int64_t level) {
  if (level != d.level()) throw Error(ErrorKind::UnsupportedParameter, "divisor level differs from operator level");
  if (n < 1) throw Error(ErrorKind::UnsupportedParameter, "n must be positive");
  Divisor src = resolve_fibers(d);
  Divisor out(level);
  add_images(out, src, left_coset_reps(level, n), 1);
  return out;
}

Divisor hecke_divisor(const AlgebraElement& u, const Divisor& d) {
  if (u.level() != d.level()) throw Error(ErrorKind::UnsupportedParameter, "divisor level differs from operator level");
  Divisor src = resolve_fibers(d);
  Divisor out(d.level());
  for (const auto& [label, mult] : u.terms())
    add_images(out, src, double_coset_reps(u.level(), label.first, label.second), mult);
  return out;
}

Divisor lift_divisor(const Divisor& d, int64_t level) {
  const int64_t m = d.level();
  if (level % m != 0) throw Error(ErrorKind::UnsupportedParameter, "target level must be a multiple");
  if (level == m) return d;
  Divisor out(level);
  const std::vector<P1Label> labels = p1_list(level);
  for (const auto& [k, c] : d.interior()) {
    const Rational ord = c * Rational(period(key_point(k, m), m));
    std::set<CMKey> images;
    for (const P1Label& l : labels) {
      HeegnerPoint z = act_matrix(lift_label(l, level), k.reduced);
      if (canonical_key(z, m) == k) images.insert(canonical_key(z, level));
    }
    for (const CMKey& img : images) out.add_key(img, ord / Rational(period(key_point(img, level), level)));
  }
  for (const auto& p : d.numeric())
    for (const P1Label& l : labels)
      if (p1_label(l.c, l.d, m) == p.label) out.add_numeric_reduced(p.tau, l, p.coeff);
  for (const auto& [k, c] : d.fibers()) out.add_fiber(k, c);
  for (const CuspInfo& info : cusps(level)) {
    P1Label below = info.den == 0 ? infinity_cusp(m) : cusp_key(info.num, info.den, m);
    auto it = d.cusp_part().find(below);
    if (it == d.cusp_part().end()) continue;
    int64_t w = cusp_info(below, m).width;
    out.add_cusp(info.key, it->second * Rational(info.width) / Rational(w));
  }
  return out;
}

Divisor eta_quotient_divisor(const EtaQuotientSpec& spec, int64_t level) {
  if (level % spec.level != 0) throw Error(ErrorKind::UnsupportedParameter, "eta quotient level must divide N");
  Divisor out(level);
  for (const CuspInfo& info : cusps(level)) {
    // Ligozat: ord at c/d, d | N, is N/24 sum_delta gcd(d, delta)^2 r_delta / (gcd(d, N/d) d delta).
    const int64_t d = info.den == 0 ? level : info.den;
    Rational sum = 0;
    for (const auto& [delta, r] : spec.exponents) {
      int64_t g = std::gcd(d, delta);
      sum += Rational(g * g * r) / Rational(delta);
    }
    sum *= Rational(level) / Rational(24 * std::gcd(d, level / d) * d);
    out.add_cusp(info.key, sum);
  }
  return out;
}

Divisor fiber_point(int64_t level, const Complex& value, const Rational* exact) {
  Divisor d(level);
  if (level == 1) {
    HeegnerPoint z;
    if (exact && rational_cm_point(*exact, z))
      d.add_point(z, 1);
    else if (exact)
      d.add_fiber({1, *exact}, 1);
    else
      d.add_numeric(j_inverse(value), 1);
    return d;
  }
  Divisor tdiv = eta_quotient_divisor(hauptmodul_spec(level), level);
  const Real tol = pow(Real(10), -40) * std::max(Real(1), Real(abs(value)));
  for (const CuspInfo& info : cusps(level)) {
    if (info.den == 0) continue;
    Rational ord = tdiv.cusp_coefficient(info.key);
    bool hit = ord > 0 ? abs(value) < tol : abs(hauptmodul_cusp_value(level, info.key) - value) < tol;
    if (ord >= 0 && hit) {
      d.add_cusp(info.key, 1);
      return d;
    }
  }
  try {
    ResolvedPoint r = resolve_location(hauptmodul_inverse(level, value), level);
    if (r.cm)
      d.add_key(r.key, 1);
    else if (exact)
      d.add_fiber({level, *exact}, 1);
    else
      d.add_numeric_reduced(r.tau, r.label, 1);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ConvergenceBudgetExceeded || !exact) throw;
    d.add_fiber({level, *exact}, 1);
  }
  return d;
}

namespace {

Divisor level1_point_divisor(const HeegnerPoint& z, const Rational& ord_z) {
  Divisor out(1);
  out.add_point(z, ord_z / Rational(period(z, 1)));
  return out;
}

Divisor atom_divisor(const Atom& a, int64_t level) {
  const HeegnerPoint omega{1, 1, 1}, i{1, 0, 1};
  Divisor base(1);
  if (auto e = std::get_if<atom::Eisenstein>(&a)) {
    Divisor e4 = level1_point_divisor(omega, 1), e6 = level1_point_divisor(i, 1);
    switch (e->k) {
      case 4: base = e4; break;
      case 6: base = e6; break;
      case 8: base = e4 * Rational(2); break;
      case 10: base = e4 + e6; break;
      case 14: base = e4 * Rational(2) + e6; break;
      default:
        throw Error(ErrorKind::UnknownDivisor, "no divisor data for E" + std::to_string(e->k));
    }
    return lift_divisor(base, level);
  }
  if (auto s = std::get_if<atom::DeltaShift>(&a)) {
    EtaQuotientSpec spec{s->m, {{s->m, 24}}};
    return eta_quotient_divisor(spec, level);
  }
  if (auto q = std::get_if<atom::EtaQuotient>(&a)) return eta_quotient_divisor(q->spec, level);
  if (auto jm = std::get_if<atom::JMinus>(&a)) {
    base = fiber_point(1, Complex(rational_to_real(jm->c)), &jm->c);
    base.add_cusp(infinity_cusp(1), -1);
    return lift_divisor(base, level);
  }
  if (auto h = std::get_if<atom::HauptmodulMinus>(&a)) {
    Divisor d = fiber_point(h->level, Complex(rational_to_real(h->c)), &h->c);
    d.add_cusp(infinity_cusp(h->level), -1);
    return lift_divisor(d, level);
  }
  throw Error(ErrorKind::UnknownDivisor, "no divisor data for " + atom_name(a));
}

}  // namespace

Divisor divisor_of_form(const FormExpression& expr, int64_t level) {
  if (level % expr.level() != 0)
    throw Error(ErrorKind::UnsupportedParameter, "form level must divide N");
  Divisor out(level);
  for (const auto& [a, e] : expr.factors()) out = out + atom_divisor(a, level) * Rational(e);
  return out;
}

Divisor expression_divisor(const FormExpression& expr) { return divisor_of_form(expr, expr.level()); }

}  // namespace hecke
