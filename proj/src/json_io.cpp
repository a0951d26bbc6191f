#include "hecke/json_io.hpp"

#include <limits>
#include <sstream>

#include "hecke/error.hpp"

namespace hecke {

namespace {

using std::int64_t;

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": " + e.what());
  }
}

Json rational_json(const Rational& r) { return to_string(r); }
Rational rational_of(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

Json cyclotomic_json(const Cyclotomic& c) {
  if (c.is_rational()) return rational_json(c.rational_value());
  Json coeffs = Json::array();
  for (const Rational& r : c.coefficients()) coeffs.push_back(rational_json(r));
  return Json{{"zeta_order", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_of(const Json& j) {
  if (!j.is_object()) return Cyclotomic(rational_of(j));
  std::vector<Rational> v;
  for (const auto& r : j.at("coeffs")) v.push_back(rational_of(r));
  return Cyclotomic::from_coefficients(j.at("zeta_order").get<int64_t>(), std::move(v));
}

template <class C, class Enc>
Json series_json(const Series<C>& f, Enc enc) {
  Json coeffs = Json::array();
  for (const C& c : f.coeffs()) coeffs.push_back(enc(c));
  return Json{{"D", f.den()}, {"order", f.order()}, {"precision", f.precision()}, {"coeffs", coeffs}};
}

template <class C, class Dec>
Series<C> series_of(const Json& j, Dec dec) {
  return guarded("series", [&] {
    const int64_t den = j.at("D").get<int64_t>(), order = j.at("order").get<int64_t>();
    const int64_t precision = j.at("precision").get<int64_t>();
    if (den < 1 || precision < 0) throw Error(ErrorKind::ParseError, "series needs D >= 1 and precision >= 0");
    std::vector<C> v;
    for (const auto& c : j.at("coeffs")) v.push_back(dec(c));
    if (static_cast<int64_t>(v.size()) != precision)
      throw Error(ErrorKind::ParseError, "series precision does not match the coefficient count");
    if (v.empty()) return Series<C>::zero(order, den);
    return Series<C>::from_coeffs(order, std::move(v), den);
  });
}

Json atom_json(const Atom& a) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, atom::Eisenstein>) {
          return Json{{"type", "E"}, {"params", {{"k", x.k}}}};
        } else if constexpr (std::is_same_v<T, atom::DeltaShift>) {
          return Json{{"type", "Delta"}, {"params", {{"m", x.m}}}};
        } else if constexpr (std::is_same_v<T, atom::JMinus>) {
          return Json{{"type", "jminus"}, {"params", {{"c", rational_json(x.c)}}}};
        } else if constexpr (std::is_same_v<T, atom::EtaQuotient>) {
          Json exps = Json::array();
          for (const auto& [m, r] : x.spec.exponents) exps.push_back({m, r});
          return Json{{"type", "eta"}, {"params", {{"N", x.spec.level}, {"exponents", exps}}}};
        } else if constexpr (std::is_same_v<T, atom::HauptmodulMinus>) {
          return Json{{"type", "haupt"}, {"params", {{"N", x.level}, {"c", rational_json(x.c)}}}};
        } else {
          return Json{{"type", "opaque"},
                      {"params", {{"weight", x.weight}, {"level", x.level}, {"series", to_json(*x.series)}}}};
        }
      },
      a);
}

FormExpression atom_of(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  const Json& p = j.at("params");
  if (type == "E") return parse_form("E" + std::to_string(p.at("k").get<int>()));
  if (type == "Delta") return FormExpression(atom::DeltaShift{p.at("m").get<int64_t>()});
  if (type == "jminus") return FormExpression(atom::JMinus{rational_of(p.at("c"))});
  if (type == "eta") {
    std::string spec = "eta:" + std::to_string(p.at("N").get<int64_t>()) + ":";
    bool first = true;
    for (const auto& e : p.at("exponents")) {
      if (!first) spec += ",";
      spec += std::to_string(e.at(0).get<int64_t>()) + "^" + std::to_string(e.at(1).get<int64_t>());
      first = false;
    }
    return parse_form(spec);
  }
  if (type == "haupt")
    return parse_form("haupt:" + std::to_string(p.at("N").get<int64_t>()) + ":" + to_string(rational_of(p.at("c"))));
  if (type == "opaque")
    return FormExpression::opaque(qseries_from_json(p.at("series")), p.at("weight").get<int>(),
                                  p.at("level").get<int64_t>());
  throw Error(ErrorKind::ParseError, "unknown atom type " + type);
}

std::string cusp_string(const CuspInfo& c) {
  if (c.den == 0) return "inf";
  return std::to_string(c.num) + "/" + std::to_string(c.den);
}

P1Label cusp_of(const std::string& s, int64_t level) {
  if (s == "inf") return infinity_cusp(level);
  const Rational r = parse_rational(s);
  return cusp_key(r.get_num().get_si(), r.get_den().get_si(), level);
}

}  // namespace

std::string real_to_string(const Real& x) {
  std::ostringstream out;
  out.precision(std::numeric_limits<Real>::max_digits10);
  out << x;
  return out.str();
}

Json to_json(const QSeries& f) { return series_json(f, rational_json); }
Json to_json(const CSeries& f) { return series_json(f, cyclotomic_json); }
QSeries qseries_from_json(const Json& j) { return series_of<Rational>(j, rational_of); }
CSeries cseries_from_json(const Json& j) { return series_of<Cyclotomic>(j, cyclotomic_of); }

Json to_json(const AlgebraElement& u) {
  Json terms = Json::array();
  for (const auto& [label, mult] : u.terms()) terms.push_back({{"a", label.first}, {"d", label.second}, {"mult", mult}});
  return Json{{"N", u.level()}, {"terms", terms}};
}

AlgebraElement algebra_from_json(const Json& j) {
  return guarded("algebra element", [&] {
    AlgebraElement u(j.at("N").get<int64_t>());
    for (const auto& t : j.at("terms"))
      u.add({t.at("a").get<int64_t>(), t.at("d").get<int64_t>()}, t.at("mult").get<int64_t>());
    return u;
  });
}

Json to_json(const FormExpression& f) {
  Json atoms = Json::array();
  for (const auto& [a, e] : f.factors()) {
    Json x = atom_json(a);
    x["exp"] = e;
    atoms.push_back(x);
  }
  return Json{{"atoms", atoms}, {"weight", f.weight()}, {"level", f.level()}};
}

FormExpression form_from_json(const Json& j) {
  return guarded("form", [&] {
    FormExpression out;
    for (const auto& a : j.at("atoms")) out = out * atom_of(a).pow(a.at("exp").get<long>());
    return out;
  });
}

Json to_json(const Complex& z) { return Json::array({real_to_string(real(z)), real_to_string(imag(z))}); }

Complex complex_from_json(const Json& j) {
  return guarded("complex", [&] {
    return Complex(Real(j.at(0).get<std::string>()), Real(j.at(1).get<std::string>()));
  });
}

Json to_json(const Divisor& d) {
  const int64_t level = d.level();
  Json interior = Json::array(), cusp_list = Json::array(), fibers = Json::array(), numeric = Json::array();
  for (const auto& [k, c] : d.interior()) {
    const HeegnerPoint z = key_point(k, level);
    interior.push_back({{"A", z.A}, {"B", z.B}, {"C", z.C}, {"coeff", rational_json(c)}});
  }
  for (const auto& [k, c] : d.cusp_part())
    cusp_list.push_back({{"cusp", cusp_string(cusp_info(k, level))}, {"coeff", rational_json(c)}});
  for (const auto& [k, c] : d.fibers())
    fibers.push_back({{"level", k.hauptmodul_level}, {"value", rational_json(k.c)}, {"coeff", rational_json(c)}});
  for (const NumericPoint& p : d.numeric())
    numeric.push_back({{"re", real_to_string(real(p.tau))},
                       {"im", real_to_string(imag(p.tau))},
                       {"label", {p.label.c, p.label.d}},
                       {"coeff", rational_json(p.coeff)}});
  Json out{{"N", level}, {"interior", interior}, {"cusps", cusp_list}};
  if (!fibers.empty()) out["fibers"] = fibers;
  out["numeric"] = numeric;
  return out;
}

Divisor divisor_from_json(const Json& j) {
  return guarded("divisor", [&] {
    const int64_t level = j.at("N").get<int64_t>();
    Divisor d(level);
    for (const auto& p : j.value("interior", Json::array()))
      d.add_point(make_point(p.at("A").get<int64_t>(), p.at("B").get<int64_t>(), p.at("C").get<int64_t>()),
                  rational_of(p.at("coeff")));
    for (const auto& c : j.value("cusps", Json::array()))
      d.add_cusp(cusp_of(c.at("cusp").get<std::string>(), level), rational_of(c.at("coeff")));
    for (const auto& f : j.value("fibers", Json::array()))
      d.add_fiber({f.at("level").get<int64_t>(), rational_of(f.at("value"))}, rational_of(f.at("coeff")));
    for (const auto& n : j.value("numeric", Json::array())) {
      const Complex tau(Real(n.at("re").get<std::string>()), Real(n.at("im").get<std::string>()));
      if (n.contains("label"))
        d.add_numeric_reduced(tau, {n.at("label").at(0).get<int64_t>(), n.at("label").at(1).get<int64_t>()},
                              rational_of(n.at("coeff")));
      else
        d.add_numeric(tau, rational_of(n.at("coeff")));
    }
    return d;
  });
}

Json to_json(const EvalParams& p) {
  return Json{{"C", p.C},           {"digits", p.digits},       {"s", p.s},
              {"window", p.window}, {"tolerance", p.tolerance}, {"reduce", p.reduce}};
}

EvalParams params_from_json(const Json& j) {
  return guarded("params", [&] {
    EvalParams p;
    p.C = j.value("C", p.C);
    p.digits = j.value("digits", p.digits);
    p.s = j.value("s", p.s);
    p.window = j.value("window", p.window);
    p.tolerance = j.value("tolerance", p.tolerance);
    p.reduce = j.value("reduce", p.reduce);
    return p;
  });
}

Json to_json(const PointValue& v, const EvalParams& p) {
  std::ostringstream err;
  err.precision(6);
  err << v.error;
  return Json{{"value", to_json(v.value)}, {"error", err.str()}, {"C", p.C}, {"params", to_json(p)}};
}

Json to_json(const PairingResult& r) {
  Json breakdown = Json::array();
  for (const Contribution& c : r.breakdown) {
    std::ostringstream err;
    err << c.error;
    breakdown.push_back(
        {{"point", c.point}, {"coeff", rational_json(c.coeff)}, {"value", to_json(c.value)}, {"error", err.str()}});
  }
  std::ostringstream err;
  err << r.error;
  Json out{{"value", to_json(r.value)}, {"error", err.str()}, {"exact", r.exact}};
  if (r.exact) out["exact_value"] = rational_json(r.exact_value);
  out["breakdown"] = breakdown;
  return out;
}

Json to_json(const EvalReport& r) {
  return Json{{"suite", r.suite}, {"label", r.label}, {"passed", r.passed}, {"lhs", r.lhs},
              {"rhs", r.rhs},     {"tolerance", r.tolerance}, {"detail", r.detail}};
}

EvalReport report_from_json(const Json& j) {
  return guarded("report", [&] {
    EvalReport r;
    r.suite = j.at("suite").get<std::string>();
    r.label = j.at("label").get<std::string>();
    r.passed = j.at("passed").get<bool>();
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    r.tolerance = j.at("tolerance").get<std::string>();
    r.detail = j.value("detail", "");
    return r;
  });
}

}  // namespace hecke
