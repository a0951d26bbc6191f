#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/forms.hpp"
#include "hecke/numeric.hpp"

namespace hecke {

// The root (-B + sqrt(B^2 - 4AC)) / 2A in H of A x^2 + B x + C, A > 0.
struct HeegnerPoint {
  std::int64_t A = 1, B = 0, C = 1;

  std::int64_t disc() const { return B * B - 4 * A * C; }
  Complex value() const;
  std::string str() const;
  friend auto operator<=>(const HeegnerPoint&, const HeegnerPoint&) = default;
};

// Primitive form for the point; throws UnsupportedParameter on a non-negative discriminant.
HeegnerPoint make_point(std::int64_t A, std::int64_t B, std::int64_t C);
HeegnerPoint act_matrix(const Matrix2& m, const HeegnerPoint& z);

// Level-one reduction: |B| <= A <= C, B >= 0 if |B| = A or A = C.
// witness is in SL_2(Z) and witness z = form.
struct PointReduction {
  HeegnerPoint form;
  Matrix2 witness;
};
PointReduction reduce_level1(const HeegnerPoint& z);

// Normalised element (c : d) of P^1(Z/N), minimal over unit multiples.
struct P1Label {
  std::int64_t c = 0, d = 0;
  friend auto operator<=>(const P1Label&, const P1Label&) = default;
};
P1Label p1_label(std::int64_t c, std::int64_t d, std::int64_t level);
// A matrix of SL_2(Z) whose bottom row reduces to the label.
Matrix2 lift_label(const P1Label& label, std::int64_t level);

// Exact canonical key of a CM point on X_0(N): reduced level-one form plus the
// coset label of Gamma_0(N) gamma, minimised over the stabiliser of the form.
struct CMKey {
  HeegnerPoint reduced;
  P1Label label;
  friend auto operator<=>(const CMKey&, const CMKey&) = default;
};
CMKey canonical_key(const HeegnerPoint& z, std::int64_t level);
// The representative point R * reduced, R = lift_label(label).
HeegnerPoint key_point(const CMKey& key, std::int64_t level);

struct CanonicalPoint {
  HeegnerPoint point;  // representative in H
  Matrix2 witness;     // in Gamma_0(N), witness z = point
};
CanonicalPoint reduce_point(const HeegnerPoint& z, std::int64_t level);

// Order of Gamma_0(N)_z / {+-1}.
int period(const HeegnerPoint& z, std::int64_t level);

struct CuspInfo {
  P1Label key;
  std::int64_t num = 1, den = 0;  // representative num/den, den = 0 for infinity
  std::int64_t width = 1;
  std::string str() const;
};
std::vector<CuspInfo> cusps(std::int64_t level);
// Canonical class of num/den (den = 0 means infinity).
P1Label cusp_key(std::int64_t num, std::int64_t den, std::int64_t level);
CuspInfo cusp_info(const P1Label& key, std::int64_t level);
P1Label infinity_cusp(std::int64_t level);

// Point of X_0(N) known only as a fibre of a Hauptmodul: t_M(z) = c (M = 1 means j).
struct FiberKey {
  std::int64_t hauptmodul_level;
  Rational c;
  friend bool operator<(const FiberKey& x, const FiberKey& y) {
    return std::tie(x.hauptmodul_level, x.c) < std::tie(y.hauptmodul_level, y.c);
  }
  friend bool operator==(const FiberKey& x, const FiberKey& y) {
    return x.hauptmodul_level == y.hauptmodul_level && x.c == y.c;
  }
};

// Non-CM point known numerically: reduced level-one tau and coset label.
struct NumericPoint {
  Complex tau;
  P1Label label;
  Rational coeff;
};

class Divisor {
 public:
  explicit Divisor(std::int64_t level = 1) : level_(level) {}

  std::int64_t level() const { return level_; }
  const std::map<CMKey, Rational>& interior() const { return interior_; }
  const std::map<FiberKey, Rational>& fibers() const { return fibers_; }
  const std::map<P1Label, Rational>& cusp_part() const { return cusps_; }
  const std::vector<NumericPoint>& numeric() const { return numeric_; }

  void add_point(const HeegnerPoint& z, const Rational& coeff);
  void add_key(const CMKey& key, const Rational& coeff);
  void add_cusp(const P1Label& key, const Rational& coeff);
  void add_fiber(const FiberKey& key, const Rational& coeff);
  void add_numeric(const Complex& tau, const Rational& coeff);  // tau anywhere in H
  // tau already reduced to the level-one domain and known not to be CM.
  void add_numeric_reduced(const Complex& tau, const P1Label& label, const Rational& coeff);

  Rational coefficient(const HeegnerPoint& z) const;
  Rational cusp_coefficient(const P1Label& key) const;
  Rational infinity_coefficient() const;
  Rational degree() const;
  bool has_cusp_support() const { return !cusps_.empty(); }
  Divisor without_fibers() const;

  Divisor operator+(const Divisor& rhs) const;
  Divisor operator-(const Divisor& rhs) const { return *this + rhs * Rational(-1); }
  Divisor operator*(const Rational& s) const;
  // Numeric points compare within 10^{-20}.
  bool operator==(const Divisor& rhs) const;
  bool operator!=(const Divisor& rhs) const { return !(*this == rhs); }
  std::string str() const;

 private:

  std::int64_t level_;
  std::map<CMKey, Rational> interior_;
  std::map<FiberKey, Rational> fibers_;
  std::map<P1Label, Rational> cusps_;
  std::vector<NumericPoint> numeric_;
};

// Every fibre point replaced by an exact CM point, a cusp, or a numeric point.
Divisor resolve_fibers(const Divisor& d);

// sum n_z sum_i [alpha_i z] over Gamma_0(N) \ Delta_N(n).
Divisor hecke_divisor(std::int64_t n, const Divisor& d, std::int64_t level);
Divisor hecke_divisor(const AlgebraElement& u, const Divisor& d);

// Pull back a divisor on X_0(M) to X_0(N), M | N.
Divisor lift_divisor(const Divisor& d, std::int64_t level);

// Orders at cusps of an eta quotient on X_0(N) (Ligozat).
Divisor eta_quotient_divisor(const EtaQuotientSpec& spec, std::int64_t level);
Divisor expression_divisor(const FormExpression& expr);
Divisor divisor_of_form(const FormExpression& expr, std::int64_t level);

// Exact CM point with j(z) = c for the thirteen rational CM j-invariants.
bool rational_cm_point(const Rational& c, HeegnerPoint& out);

// The point where j (level 1) or t_N takes the given value, coefficient 1.
// Exact rational values stay symbolic unless they land on a CM point or cusp.
Divisor fiber_point(std::int64_t level, const Complex& value, const Rational* exact = nullptr);

// Value of t_N at a cusp of X_0(N) other than infinity (numeric; Ligozat decides zeros).
Complex hauptmodul_cusp_value(std::int64_t level, const P1Label& cusp);

// Point of X_0(N) for a (possibly numeric) location tau in H.
struct ResolvedPoint {
  bool cm;
  CMKey key;
  Complex tau;  // reduced level-one tau when !cm
  P1Label label;
};
ResolvedPoint resolve_location(const Complex& tau, std::int64_t level);

}  // namespace hecke
