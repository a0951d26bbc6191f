#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hecke/arith.hpp"
#include "hecke/divisor_map.hpp"
#include "hecke/error.hpp"
#include "hecke/hecke_ops.hpp"
#include "hecke/json_io.hpp"
#include "hecke/suites.hpp"

using namespace hecke;

namespace {

constexpr const char* kDigitsEnv = "HECKE_DIGITS";

int default_digits() {
  if (const char* env = std::getenv(kDigitsEnv)) {
    try {
      const int d = std::stoi(env);
      if (d >= 10 && d <= 90) return d;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError(std::string(kDigitsEnv) + " must be an integer in [10, 90]");
  }
  return 50;
}

// Flattened "path value" rows for --format table.
void print_table(const Json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) print_table(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out << path << "\t[]\n";
    for (std::size_t i = 0; i < j.size(); ++i) print_table(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void print_series_table(const Json& j, std::ostream& out) {
  const int64_t den = j.at("D").get<int64_t>(), order = j.at("order").get<int64_t>();
  out << "exponent\tcoefficient\n";
  int64_t e = order;
  for (const auto& c : j.at("coeffs")) {
    out << (den == 1 ? std::to_string(e) : std::to_string(e) + "/" + std::to_string(den)) << "\t"
        << (c.is_string() ? c.get<std::string>() : c.dump()) << "\n";
    ++e;
  }
  out << "known below\t" << (den == 1 ? std::to_string(e) : std::to_string(e) + "/" + std::to_string(den)) << "\n";
}

Json read_json_argument(const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw CLI::ValidationError("cannot read " + text.substr(1));
    return Json::parse(in);
  }
  return Json::parse(text);
}

Complex parse_tau(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--tau", "expected x,y with y > 0");
  Real x, y;
  try {
    x = Real(text.substr(0, comma));
    y = Real(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--tau", "expected decimal numbers x,y");
  }
  if (y <= 0) throw CLI::ValidationError("--tau", "imaginary part must be positive");
  return Complex(x, y);
}

QSeries truncate_to(const QSeries& f, int64_t prec) { return f.end() > prec ? f.truncated(prec) : f; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke operators on modular forms, divisors and divisor sums"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::string form_key, u_text, v_text, divisor_text, suite = "all", tau_text, point_text, norm = "paper",
                                                                 slash = "plain";
  int64_t n = 2, level = 1, prec = 20, m = 1, C = 300;
  double s = 1.5, tolerance = 0;
  int digits = 0;
  bool reduce = true;

  auto* qexp = app.add_subcommand("qexp", "q-expansion of a form");
  qexp->add_option("--form", form_key, "Registry key, e.g. E4, Delta, jminus:1728, eta:4:1^8,4^-8")->required();
  qexp->add_option("--prec", prec, "Coefficients below q^prec")->check(CLI::Range(int64_t{1}, int64_t{5000}));

  auto* hadd = app.add_subcommand("hecke-add", "additive Hecke operator on a q-expansion");
  hadd->add_option("--form", form_key, "Registry key")->required();
  hadd->add_option("--n", n, "Index n of T(n)")->check(CLI::Range(int64_t{1}, int64_t{500}));
  hadd->add_option("--u", u_text, "Hecke ring element instead of T(n), e.g. T(1,4)+3*T(2,2)");
  hadd->add_option("--N", level, "Level")->check(CLI::Range(int64_t{1}, int64_t{1000}));
  hadd->add_option("--prec", prec, "Coefficients below q^prec")->check(CLI::Range(int64_t{1}, int64_t{2000}));
  hadd->add_option("--normalization", norm, "paper: n^{1-k/2} factor; classical: without")
      ->check(CLI::IsMember({"paper", "classical"}));

  auto* hmul = app.add_subcommand("hecke-mult", "multiplicative Hecke operator on a form");
  hmul->add_option("--form", form_key, "Registry key")->required();
  hmul->add_option("--n", n, "Index n of T(n)")->check(CLI::Range(int64_t{1}, int64_t{100}));
  hmul->add_option("--u", u_text, "Hecke ring element instead of T(n)");
  hmul->add_option("--N", level, "Level")->check(CLI::Range(int64_t{1}, int64_t{1000}));
  hmul->add_option("--prec", prec, "Coefficients below q^prec")->check(CLI::Range(int64_t{1}, int64_t{1000}));
  hmul->add_option("--slash", slash, "plain f((a tau + b)/d) or weighted")->check(CLI::IsMember({"plain", "weighted"}));

  auto* amul = app.add_subcommand("algebra-mul", "product in the Hecke ring R_0(N)");
  amul->add_option("--N", level, "Level")->check(CLI::Range(int64_t{1}, int64_t{1000}));
  amul->add_option("--u", u_text, "First factor, e.g. T2 or T(1,4)+3*T(2,2)")->required();
  amul->add_option("--v", v_text, "Second factor")->required();

  auto* div = app.add_subcommand("divisor", "divisor of a form on X_0(N)");
  div->add_option("--form", form_key, "Registry key")->required();
  div->add_option("--N", level, "Level (a multiple of the form's level)")->check(CLI::Range(int64_t{1}, int64_t{1000}));
  bool resolve = false;
  div->add_flag("--resolve", resolve, "Replace symbolic fibres by CM or numeric points");

  auto* hdiv = app.add_subcommand("hecke-div", "Hecke action on a divisor");
  hdiv->add_option("--divisor", divisor_text, "Divisor JSON, or @file");
  hdiv->add_option("--form", form_key, "Use the divisor of this form instead");
  hdiv->add_option("--n", n, "Index n of T(n)")->check(CLI::Range(int64_t{1}, int64_t{200}));
  hdiv->add_option("--u", u_text, "Hecke ring element instead of T(n)");
  hdiv->add_option("--N", level, "Level when --form is used")->check(CLI::Range(int64_t{1}, int64_t{1000}));

  auto* bko = app.add_subcommand("bko", "BKO pairing (j_n, f) at level one");
  bko->add_option("--n", n, "Index of j_n")->check(CLI::Range(int64_t{1}, int64_t{50}));
  bko->add_option("--form", form_key, "Registry key")->required();
  bko->add_option("--digits", digits, "Working digits (default from " + std::string(kDigitsEnv) + ", else 50)")
      ->check(CLI::Range(10, 90));

  auto* roh = app.add_subcommand("rohrlich", "Rohrlich-type sum R_{N,m}(s; f)");
  roh->add_option("--N", level, "Level")->check(CLI::Range(int64_t{1}, int64_t{1000}));
  roh->add_option("--m", m, "Index m")->check(CLI::Range(int64_t{0}, int64_t{200}));
  roh->add_option("--form", form_key, "Registry key")->required();
  auto* s_opt = roh->add_option("--s", s, "Real s > 1; omit for the exact value at s = 1")
                    ->check(CLI::Range(1.0000001, 50.0));
  roh->add_option("--C", C, "Truncation of c")->check(CLI::Range(int64_t{1}, int64_t{5000}));

  auto* nie = app.add_subcommand("niebur", "Niebur-Poincare series F_{N,-m}(tau, s)");
  nie->add_option("--N", level, "Level")->check(CLI::Range(int64_t{1}, int64_t{1000}));
  nie->add_option("--m", m, "Index m (0 gives the Eisenstein series)")->check(CLI::Range(int64_t{0}, int64_t{200}));
  nie->add_option("--tau", tau_text, "Point x,y meaning x + iy");
  nie->add_option("--point", point_text, "CM point A,B,C (root of A x^2 + B x + C in H)");
  nie->add_option("--s", s, "Real s > 1")->check(CLI::Range(1.0000001, 50.0));
  nie->add_option("--C", C, "Truncation of c")->check(CLI::Range(int64_t{1}, int64_t{5000}));
  nie->add_option("--digits", digits, "Working digits")->check(CLI::Range(10, 90));
  nie->add_option("--tolerance", tolerance, "Fail with ConvergenceBudgetExceeded above this error estimate")
      ->check(CLI::NonNegativeNumber);
  nie->add_flag("!--no-reduce", reduce, "Sum at tau itself instead of a reduced orbit point");

  auto* ver = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  ver->add_option("--suite", suite, "Suite name or all")->check(CLI::IsMember(suite_choices));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Json result;
  bool is_series = false;
  int code = 0;
  try {
    if (digits == 0) digits = default_digits();
    if (*qexp) {
      result = to_json(expression_qexp(parse_form(form_key), prec));
      is_series = true;
    } else if (*hadd) {
      const FormExpression f = parse_form(form_key);
      if (level % f.level() != 0) throw CLI::ValidationError("--N", "must be a multiple of the form's level");
      const int k = f.weight();
      if (!u_text.empty()) {
        const AlgebraElement u = parse_algebra_element(u_text, level);
        int64_t det = 0;
        for (const auto& [label, mult] : u.terms()) det = std::max(det, label.first * label.second);
        result = to_json(truncate_to(apply_additive(expression_qexp(f, det * prec + 1), k, u), prec));
      } else if (level == 1) {
        const auto nm = norm == "paper" ? AdditiveNormalization::Paper : AdditiveNormalization::Classical;
        result = to_json(hecke_additive_formula(expression_qexp(f, n * (prec - 1) + 1), k, n, nm));
      } else {
        if (norm != "paper") throw CLI::ValidationError("--normalization", "classical is available at N = 1 only");
        result = to_json(truncate_to(hecke_additive_cosets(expression_qexp(f, n * prec + 1), k, n, level), prec));
      }
      is_series = true;
    } else if (*hmul) {
      const FormExpression f = parse_form(form_key);
      const auto conv = slash == "plain" ? SlashConvention::Plain : SlashConvention::Weighted;
      const MultiplicativeImage img = u_text.empty()
                                          ? hecke_multiplicative(f, n, level, prec, conv)
                                          : apply_multiplicative(f, parse_algebra_element(u_text, level), prec, conv);
      result = to_json(img.series);
      result["weight"] = img.weight;
      result["N"] = img.level;
      is_series = true;
    } else if (*amul) {
      result = to_json(algebra_multiply(parse_algebra_element(u_text, level), parse_algebra_element(v_text, level)));
    } else if (*div) {
      const Divisor d = divisor_of_form(parse_form(form_key), level);
      result = to_json(resolve ? resolve_fibers(d) : d);
    } else if (*hdiv) {
      if (divisor_text.empty() == form_key.empty())
        throw CLI::ValidationError("hecke-div", "give exactly one of --divisor and --form");
      const Divisor d = form_key.empty() ? divisor_from_json(read_json_argument(divisor_text))
                                         : divisor_of_form(parse_form(form_key), level);
      result = to_json(u_text.empty() ? hecke_divisor(n, d, d.level())
                                      : hecke_divisor(parse_algebra_element(u_text, d.level()), d));
    } else if (*bko) {
      const FormExpression f = parse_form(form_key);
      result = to_json(bko_pairing(n, f, digits));
      result["exact_check"] = to_string(r_at_s1(1, n, f));
      result["digits"] = digits;
    } else if (*roh) {
      const FormExpression f = parse_form(form_key);
      if (s_opt->count() == 0) {
        if (m < 1) throw CLI::ValidationError("--m", "the exact value at s = 1 needs m >= 1");
        result = Json{{"N", level}, {"m", m}, {"s", "1"}, {"exact", true}, {"value", to_string(r_at_s1(level, m, f))}};
      } else {
        EvalParams p;
        p.C = C;
        p.s = s;
        p.digits = digits;
        result = to_json(r_numeric(level, m, f, p));
        result["params"] = to_json(p);
      }
    } else if (*nie) {
      if (tau_text.empty() == point_text.empty()) throw CLI::ValidationError("niebur", "give exactly one of --tau and --point");
      Complex tau;
      if (!tau_text.empty()) {
        tau = parse_tau(tau_text);
      } else {
        std::vector<int64_t> abc;
        std::stringstream in(point_text);
        for (std::string part; std::getline(in, part, ',');) abc.push_back(std::stoll(part));
        if (abc.size() != 3) throw CLI::ValidationError("--point", "expected A,B,C");
        tau = make_point(abc[0], abc[1], abc[2]).value();
      }
      EvalParams p;
      p.C = C;
      p.s = s;
      p.digits = digits;
      p.tolerance = tolerance;
      p.reduce = reduce;
      result = to_json(niebur_value(level, m, tau, p), p);
    } else if (*ver) {
      result = Json::array();
      const std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      for (const std::string& name : names)
        for (const EvalReport& r : run_suite(name)) {
          if (!r.passed) code = 1;
          result.push_back(to_json(r));
        }
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << Json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "usage error: malformed JSON: " << e.what() << "\n";
    return 2;
  }

  if (format == "table") {
    if (is_series)
      print_series_table(result, std::cout);
    else if (*ver) {
      for (const auto& r : result)
        std::cout << (r["passed"].get<bool>() ? "PASS" : "FAIL") << "\t" << r["suite"].get<std::string>() << "\t"
                  << r["label"].get<std::string>() << "\t" << r["lhs"].get<std::string>() << "\t"
                  << r["rhs"].get<std::string>() << "\n";
    } else
      print_table(result, "", std::cout);
  } else {
    std::cout << result.dump() << "\n";
  }
  return code;
}
