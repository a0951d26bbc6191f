#include "hecke/forms.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hecke/hecke_ops.hpp"

namespace hecke {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Memo of the longest expansion computed so far per key.
class SeriesCache {
 public:
  template <class Make>
  QSeries get(const std::string& key, std::int64_t prec, Make make) {
    {
      std::lock_guard<std::mutex> guard(lock_);
      auto it = table_.find(key);
      if (it != table_.end() && it->second.end() >= prec) return it->second.truncated(prec);
    }
    QSeries s = make(prec);
    std::lock_guard<std::mutex> guard(lock_);
    auto& slot = table_[key];
    if (slot.end() < s.end()) slot = s;
    return s;
  }

 private:
  std::mutex lock_;
  std::map<std::string, QSeries> table_;
};

SeriesCache& cache() {
  static SeriesCache c;
  return c;
}

// prod_{n >= 1} (1 - q^n) by the pentagonal number theorem.
QSeries euler_product(std::int64_t prec) {
  return cache().get("euler", prec, [](std::int64_t p) {
    std::vector<Rational> v(static_cast<std::size_t>(std::max<std::int64_t>(p, 1)), Rational(0));
    for (std::int64_t k = 0;; ++k) {
      bool any = false;
      for (std::int64_t sign : {1, -1}) {
        if (k == 0 && sign == -1) continue;
        std::int64_t kk = sign * k;
        std::int64_t e = kk * (3 * kk - 1) / 2;
        if (e < p) {
          v[static_cast<std::size_t>(e)] += (k % 2 ? -1 : 1);
          any = true;
        }
      }
      if (!any) break;
    }
    return QSeries::from_coeffs(0, std::move(v)).truncated(p);
  });
}

}  // namespace

std::int64_t EtaQuotientSpec::twice_weight() const {
  std::int64_t s = 0;
  for (auto [m, r] : exponents) s += r;
  return s;
}

std::int64_t EtaQuotientSpec::order_times_24() const {
  std::int64_t s = 0;
  for (auto [m, r] : exponents) s += m * r;
  return s;
}

int atom_weight(const Atom& a) {
  return std::visit(overloaded{
                        [](const atom::Eisenstein& e) { return e.k; },
                        [](const atom::DeltaShift&) { return 12; },
                        [](const atom::JMinus&) { return 0; },
                        [](const atom::EtaQuotient& e) {
                          auto tw = e.spec.twice_weight();
                          if (tw % 2) throw Error(ErrorKind::UnsupportedWeight, "eta quotient of half-integral weight");
                          return static_cast<int>(tw / 2);
                        },
                        [](const atom::HauptmodulMinus&) { return 0; },
                        [](const atom::Opaque& o) { return o.weight; },
                    },
                    a);
}

std::int64_t atom_level(const Atom& a) {
  return std::visit(overloaded{
                        [](const atom::Eisenstein&) -> std::int64_t { return 1; },
                        [](const atom::DeltaShift& d) -> std::int64_t { return d.m; },
                        [](const atom::JMinus&) -> std::int64_t { return 1; },
                        [](const atom::EtaQuotient& e) -> std::int64_t { return e.spec.level; },
                        [](const atom::HauptmodulMinus& h) -> std::int64_t { return h.level; },
                        [](const atom::Opaque& o) -> std::int64_t { return o.level; },
                    },
                    a);
}

std::int64_t atom_order(const Atom& a) {
  return std::visit(overloaded{
                        [](const atom::Eisenstein&) -> std::int64_t { return 0; },
                        [](const atom::DeltaShift& d) -> std::int64_t { return d.m; },
                        [](const atom::JMinus&) -> std::int64_t { return -1; },
                        [](const atom::EtaQuotient& e) -> std::int64_t {
                          auto o = e.spec.order_times_24();
                          if (o % 24)
                            throw Error(ErrorKind::UnsupportedParameter, "eta quotient with non-integral order at infinity");
                          return o / 24;
                        },
                        [](const atom::HauptmodulMinus&) -> std::int64_t { return -1; },
                        [](const atom::Opaque& o) -> std::int64_t {
                          if (o.series->den() != 1)
                            throw Error(ErrorKind::NotIntegralSeries, "opaque atom must live on the integral grid");
                          return o.series->order();
                        },
                    },
                    a);
}

std::string atom_name(const Atom& a) {
  return std::visit(overloaded{
                        [](const atom::Eisenstein& e) { return "E" + std::to_string(e.k); },
                        [](const atom::DeltaShift& d) {
                          return d.m == 1 ? std::string("Delta") : "Delta:" + std::to_string(d.m);
                        },
                        [](const atom::JMinus& j) {
                          return is_zero(j.c) ? std::string("j") : "jminus:" + to_string(j.c);
                        },
                        [](const atom::EtaQuotient& e) {
                          std::string s = "eta:" + std::to_string(e.spec.level) + ":";
                          bool first = true;
                          for (auto [m, r] : e.spec.exponents) {
                            if (!first) s += ",";
                            first = false;
                            s += std::to_string(m) + "^" + std::to_string(r);
                          }
                          return s;
                        },
                        [](const atom::HauptmodulMinus& h) {
                          return "haupt:" + std::to_string(h.level) + ":" + to_string(h.c);
                        },
                        [](const atom::Opaque&) { return std::string("opaque"); },
                    },
                    a);
}

FormExpression FormExpression::opaque(QSeries series, int weight, std::int64_t level) {
  return FormExpression(atom::Opaque{std::make_shared<const QSeries>(std::move(series)), weight, level});
}

int FormExpression::weight() const {
  long w = 0;
  for (const auto& [a, e] : factors_) w += atom_weight(a) * e;
  return static_cast<int>(w);
}

std::int64_t FormExpression::level() const {
  std::int64_t l = 1;
  for (const auto& [a, e] : factors_) l = lcm64(l, atom_level(a));
  return l;
}

std::int64_t FormExpression::order() const {
  std::int64_t o = 0;
  for (const auto& [a, e] : factors_) o += atom_order(a) * e;
  return o;
}

FormExpression FormExpression::operator*(const FormExpression& rhs) const {
  FormExpression out = *this;
  out.factors_.insert(out.factors_.end(), rhs.factors_.begin(), rhs.factors_.end());
  return out;
}

FormExpression FormExpression::pow(long k) const {
  FormExpression out = *this;
  for (auto& f : out.factors_) f.second *= k;
  return out;
}

QSeries eisenstein(int k, std::int64_t prec) {
  if (k < 4 || k % 2) throw Error(ErrorKind::UnsupportedWeight, "Eisenstein series needs even weight >= 4, got " + std::to_string(k));
  return cache().get("E" + std::to_string(k), prec, [k](std::int64_t p) {
    const Rational factor = -Rational(2 * k) / bernoulli(static_cast<unsigned>(k));
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(std::max<std::int64_t>(p, 0)));
    if (p > 0) v.push_back(Rational(1));
    for (std::int64_t n = 1; n < p; ++n) v.push_back(factor * Rational(divisor_sigma(static_cast<unsigned>(k - 1), n)));
    if (v.empty()) return QSeries::zero(p);
    return QSeries::from_coeffs(0, std::move(v));
  });
}

QSeries delta(std::int64_t prec) {
  return cache().get("Delta", prec, [](std::int64_t p) {
    if (p <= 1) return QSeries::zero(p);
    return euler_product(p - 1).pow(24).shifted(1);
  });
}

QSeries j_invariant(std::int64_t prec) {
  return cache().get("j", prec, [](std::int64_t p) {
    // rel. precision p + 1 on both factors
    return (eisenstein(4, p + 1).pow(3) / delta(p + 2)).truncated(p);
  });
}

QSeries j_paper(std::int64_t prec) { return j_invariant(prec) - QSeries::monomial(Rational(720), 0, prec); }

QSeries jn(std::int64_t n, std::int64_t prec) {
  if (n < 1) throw Error(ErrorKind::UnsupportedParameter, "j_n needs n >= 1");
  if (n == 1) return j_paper(prec);
  return hecke_additive_formula(j_paper(std::max<std::int64_t>(prec, 1) * n), 0, n).truncated(prec);
}

QSeries eta_quotient_qexp(const EtaQuotientSpec& spec, std::int64_t prec) {
  for (auto [m, r] : spec.exponents)
    if (m < 1 || spec.level % m)
      throw Error(ErrorKind::UnsupportedParameter, "eta factor " + std::to_string(m) + " does not divide the level");
  const std::int64_t o24 = spec.order_times_24();
  if (o24 % 24) throw Error(ErrorKind::UnsupportedParameter, "eta quotient with non-integral order at infinity");
  const std::int64_t order = o24 / 24;
  const std::int64_t rel = prec - order;
  if (rel <= 0) return QSeries::zero(prec);
  QSeries acc = QSeries::monomial(Rational(1), 0, rel);
  for (auto [m, r] : spec.exponents) {
    if (r == 0) continue;
    QSeries e = rescale_exponents(euler_product((rel + m - 1) / m), Rational(m)).truncated(rel);
    acc = acc * e.pow(r);
  }
  return acc.shifted(order);
}

EtaQuotientSpec hauptmodul_spec(std::int64_t level) {
  if (level < 2 || 24 % (level - 1))
    throw Error(ErrorKind::NonGenusZeroLevel, "no eta-quotient Hauptmodul (eta/eta(N.))^{24/(N-1)} at level " + std::to_string(level));
  EtaQuotientSpec s;
  s.level = level;
  s.exponents[1] = 24 / (level - 1);
  s.exponents[level] = -24 / (level - 1);
  return s;
}

QSeries hauptmodul(std::int64_t level, std::int64_t prec) {
  return cache().get("t" + std::to_string(level), prec, [level](std::int64_t p) {
    return eta_quotient_qexp(hauptmodul_spec(level), p);
  });
}

QSeries atom_qexp(const Atom& a, std::int64_t prec) {
  return std::visit(overloaded{
                        [prec](const atom::Eisenstein& e) { return eisenstein(e.k, prec); },
                        [prec](const atom::DeltaShift& d) {
                          return rescale_exponents(delta((prec + d.m - 1) / d.m), Rational(d.m)).truncated(prec);
                        },
                        [prec](const atom::JMinus& j) {
                          return j_invariant(prec) - QSeries::monomial(j.c, 0, prec);
                        },
                        [prec](const atom::EtaQuotient& e) { return eta_quotient_qexp(e.spec, prec); },
                        [prec](const atom::HauptmodulMinus& h) {
                          return hauptmodul(h.level, prec) - QSeries::monomial(h.c, 0, prec);
                        },
                        [prec](const atom::Opaque& o) {
                          if (o.series->end() < prec)
                            throw Error(ErrorKind::PrecisionExhausted, "opaque series known only below q^" +
                                                                           std::to_string(o.series->end()));
                          return o.series->truncated(prec);
                        },
                    },
                    a);
}

QSeries expression_qexp(const FormExpression& expr, std::int64_t prec) {
  const std::int64_t order = expr.order();
  const std::int64_t rel = prec - order;
  if (rel <= 0) return QSeries::zero(prec);
  QSeries acc = QSeries::monomial(Rational(1), 0, rel);
  for (const auto& [a, e] : expr.factors()) {
    if (e == 0) continue;
    QSeries s = atom_qexp(a, atom_order(a) + rel);
    if (s.is_zero() || s.order() != atom_order(a))
      throw Error(ErrorKind::NonUnitLeading, "atom " + atom_name(a) + " vanishes to unexpected order at infinity");
    acc = acc * s.pow(e);
  }
  return acc.truncated(prec);
}

namespace {

std::int64_t parse_int(const std::string& s, const std::string& ctx) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad integer '" + s + "' in '" + ctx + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Atom parse_atom(const std::string& t) {
  if (t == "Delta") return atom::DeltaShift{1};
  if (t.rfind("Delta:", 0) == 0) {
    auto m = parse_int(t.substr(6), t);
    if (m < 1) throw Error(ErrorKind::ParseError, "Delta shift must be positive");
    return atom::DeltaShift{m};
  }
  if (t == "j") return atom::JMinus{Rational(0)};
  if (t == "j_paper") return atom::JMinus{Rational(720)};
  if (t.rfind("jminus:", 0) == 0) return atom::JMinus{parse_rational(t.substr(7))};
  if (t.size() > 1 && t[0] == 'E' && std::isdigit(static_cast<unsigned char>(t[1]))) {
    auto k = parse_int(t.substr(1), t);
    if (k < 4 || k % 2) throw Error(ErrorKind::UnsupportedWeight, "Eisenstein weight " + std::to_string(k));
    return atom::Eisenstein{static_cast<int>(k)};
  }
  if (t.rfind("haupt:", 0) == 0) {
    auto parts = split(t.substr(6), ':');
    if (parts.empty() || parts.size() > 2) throw Error(ErrorKind::ParseError, "expected haupt:<N>[:<c>]");
    auto level = parse_int(parts[0], t);
    hauptmodul_spec(level);
    return atom::HauptmodulMinus{level, parts.size() == 2 ? parse_rational(parts[1]) : Rational(0)};
  }
  if (t.rfind("eta:", 0) == 0) {
    auto colon = t.find(':', 4);
    if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "expected eta:<N>:<m>^<r>,...");
    EtaQuotientSpec spec;
    spec.level = parse_int(t.substr(4, colon - 4), t);
    for (const auto& item : split(t.substr(colon + 1), ',')) {
      auto caret = item.find('^');
      if (caret == std::string::npos) throw Error(ErrorKind::ParseError, "eta factor '" + item + "' lacks ^<r>");
      auto m = parse_int(item.substr(0, caret), t);
      if (m < 1 || spec.level % m) throw Error(ErrorKind::ParseError, "eta factor " + std::to_string(m) + " does not divide the level");
      spec.exponents[m] += parse_int(item.substr(caret + 1), t);
    }
    return atom::EtaQuotient{spec};
  }
  throw Error(ErrorKind::ParseError, "unknown form '" + t + "'");
}

}  // namespace

FormExpression parse_form(const std::string& text) {
  FormExpression out;
  bool any = false;
  for (auto factor : split(text, '*')) {
    long exponent = 1;
    std::string body = factor;
    if (!factor.empty() && factor[0] == '(') {
      auto close = factor.rfind(')');
      if (close == std::string::npos) throw Error(ErrorKind::ParseError, "unbalanced parenthesis in '" + text + "'");
      body = factor.substr(1, close - 1);
      std::string rest = factor.substr(close + 1);
      if (!rest.empty()) {
        if (rest[0] != '^') throw Error(ErrorKind::ParseError, "expected ^ after ) in '" + text + "'");
        exponent = parse_int(rest.substr(1), text);
      }
    } else if (factor.rfind("eta:", 0) != 0) {
      auto caret = factor.rfind('^');
      if (caret != std::string::npos) {
        body = factor.substr(0, caret);
        exponent = parse_int(factor.substr(caret + 1), text);
      }
    }
    if (body.empty()) throw Error(ErrorKind::ParseError, "empty factor in '" + text + "'");
    FormExpression f(parse_atom(body), exponent);
    out = any ? out * f : f;
    any = true;
  }
  if (!any) throw Error(ErrorKind::ParseError, "empty form expression");
  return out;
}

}  // namespace hecke
