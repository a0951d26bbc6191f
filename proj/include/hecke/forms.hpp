#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hecke/series.hpp"

namespace hecke {

// Exponent r_m of eta(m tau) for each m dividing the level.
struct EtaQuotientSpec {
  std::int64_t level = 1;
  std::map<std::int64_t, std::int64_t> exponents;

  // Twice the weight, sum of r_m.
  std::int64_t twice_weight() const;
  // 24 * (order at infinity) = sum of m * r_m.
  std::int64_t order_times_24() const;
};

namespace atom {
struct Eisenstein { int k; };
struct DeltaShift { std::int64_t m; };
// j(tau) - c with the classical 744-normalised j.
struct JMinus { Rational c; };
struct EtaQuotient { EtaQuotientSpec spec; };
// t_N - c with t_N = (eta(tau)/eta(N tau))^{24/(N-1)}, N - 1 dividing 24.
struct HauptmodulMinus { std::int64_t level; Rational c; };
struct Opaque {
  std::shared_ptr<const QSeries> series;
  int weight;
  std::int64_t level;
};
}  // namespace atom

using Atom = std::variant<atom::Eisenstein, atom::DeltaShift, atom::JMinus, atom::EtaQuotient,
                          atom::HauptmodulMinus, atom::Opaque>;

int atom_weight(const Atom& a);
std::int64_t atom_level(const Atom& a);
// Leading exponent at infinity (integral for every supported atom).
std::int64_t atom_order(const Atom& a);
std::string atom_name(const Atom& a);

class FormExpression {
 public:
  FormExpression() = default;
  explicit FormExpression(Atom a, long exponent = 1) { factors_.push_back({std::move(a), exponent}); }

  static FormExpression opaque(QSeries series, int weight, std::int64_t level);

  const std::vector<std::pair<Atom, long>>& factors() const { return factors_; }
  int weight() const;
  std::int64_t level() const;
  // Leading exponent at infinity of the product.
  std::int64_t order() const;

  FormExpression operator*(const FormExpression& rhs) const;
  FormExpression pow(long k) const;

 private:
  std::vector<std::pair<Atom, long>> factors_;
};

// Expansions below carry every coefficient of q^m with m < prec.
QSeries eisenstein(int k, std::int64_t prec);
QSeries delta(std::int64_t prec);
QSeries j_invariant(std::int64_t prec);
// j - 720, constant term 24.
QSeries j_paper(std::int64_t prec);
// j_paper | T(n) in weight 0: q^{-n} + 24 sigma_1(n) + O(q).
QSeries jn(std::int64_t n, std::int64_t prec);
QSeries eta_quotient_qexp(const EtaQuotientSpec& spec, std::int64_t prec);
// (eta(tau)/eta(N tau))^{24/(N-1)}.
EtaQuotientSpec hauptmodul_spec(std::int64_t level);
QSeries hauptmodul(std::int64_t level, std::int64_t prec);
QSeries atom_qexp(const Atom& a, std::int64_t prec);
QSeries expression_qexp(const FormExpression& expr, std::int64_t prec);

// Registry keys: E4, E6, E<k>, Delta, Delta:<m>, j, j_paper, jminus:<c>,
// eta:<N>:<m>^<r>,<m>^<r>..., haupt:<N>, haupt:<N>:<c>; factors joined by
// '*' and each optionally raised by '^<int>'.
FormExpression parse_form(const std::string& text);

}  // namespace hecke
