#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

struct Matrix2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }
  // gcd of the four entries.
  std::int64_t content() const;
  Matrix2 adjugate() const { return {d, -b, -c, a}; }
  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
  std::string str() const;
};

bool in_delta(const Matrix2& m, std::int64_t level);
bool in_gamma0(const Matrix2& m, std::int64_t level);

// Gamma_0(N) \ Delta_N(n): (a b; 0 d) with ad = n, gcd(a, N) = 1, 0 <= b < d.
std::vector<Matrix2> left_coset_reps(std::int64_t level, std::int64_t n);
// Left cosets inside Gamma_0(N) diag(l, m) Gamma_0(N): the above with content l.
std::vector<Matrix2> double_coset_reps(std::int64_t level, std::int64_t l, std::int64_t m);

bool same_left_coset(const Matrix2& x, const Matrix2& y, std::int64_t level);

// Elementary divisors (content, det/content) of x in Delta_N.
std::pair<std::int64_t, std::int64_t> double_coset_label(const Matrix2& x, std::int64_t level);

class AlgebraElement {
 public:
  using Label = std::pair<std::int64_t, std::int64_t>;

  explicit AlgebraElement(std::int64_t level = 1) : level_(level) {}
  // The single double coset T(l, m).
  static AlgebraElement basis(std::int64_t level, std::int64_t l, std::int64_t m);

  std::int64_t level() const { return level_; }
  const std::map<Label, std::int64_t>& terms() const { return terms_; }
  void add(const Label& label, std::int64_t mult);
  bool is_zero() const { return terms_.empty(); }

  AlgebraElement operator+(const AlgebraElement& rhs) const;
  AlgebraElement operator*(std::int64_t scalar) const;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
  std::string str() const;

 private:
  std::int64_t level_;
  std::map<Label, std::int64_t> terms_;
};

// Product in the Hecke ring, counting pairs of left-coset representatives.
AlgebraElement algebra_multiply(const AlgebraElement& u, const AlgebraElement& v);

// T(n) = sum of T(a, d) with ad = n, a | d, gcd(a, N) = 1.
AlgebraElement t_n(std::int64_t n, std::int64_t level);

// Parses sums like "T2", "T(1,4)+3*T(2,2)", "T(2,2)".
AlgebraElement parse_algebra_element(const std::string& text, std::int64_t level);

}  // namespace hecke
