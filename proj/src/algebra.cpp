#include "hecke/algebra.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "hecke/arith.hpp"
#include "hecke/error.hpp"

namespace hecke {

std::int64_t Matrix2::content() const {
  return std::gcd(std::gcd(std::llabs(a), std::llabs(b)), std::gcd(std::llabs(c), std::llabs(d)));
}

std::string Matrix2::str() const {
  std::ostringstream os;
  os << "(" << a << " " << b << "; " << c << " " << d << ")";
  return os.str();
}

bool in_delta(const Matrix2& m, std::int64_t level) {
  return m.det() > 0 && std::gcd(std::llabs(m.a), level) == 1 && m.c % level == 0;
}

bool in_gamma0(const Matrix2& m, std::int64_t level) { return m.det() == 1 && m.c % level == 0; }

std::vector<Matrix2> left_coset_reps(std::int64_t level, std::int64_t n) {
  if (n < 1 || level < 1) throw Error(ErrorKind::UnsupportedParameter, "coset representatives need n, N >= 1");
  std::vector<Matrix2> reps;
  for (auto a : divisors(n)) {
    if (std::gcd(a, level) != 1) continue;
    const std::int64_t d = n / a;
    for (std::int64_t b = 0; b < d; ++b) reps.push_back({a, b, 0, d});
  }
  return reps;
}

std::vector<Matrix2> double_coset_reps(std::int64_t level, std::int64_t l, std::int64_t m) {
  if (l < 1 || m % l || std::gcd(l, level) != 1)
    throw Error(ErrorKind::UnsupportedParameter,
                "T(" + std::to_string(l) + "," + std::to_string(m) + ") is not a double coset label at level " +
                    std::to_string(level));
  std::vector<Matrix2> out;
  for (const auto& r : left_coset_reps(level, l * m))
    if (r.content() == l) out.push_back(r);
  return out;
}

bool same_left_coset(const Matrix2& x, const Matrix2& y, std::int64_t level) {
  const std::int64_t n = y.det();
  if (x.det() != n) throw Error(ErrorKind::DeterminantMismatch, x.str() + " vs " + y.str());
  Matrix2 p = x * y.adjugate();  // = n * x y^{-1}
  if (p.a % n || p.b % n || p.c % n || p.d % n) return false;
  return (p.c / n) % level == 0;
}

std::pair<std::int64_t, std::int64_t> double_coset_label(const Matrix2& x, std::int64_t level) {
  if (!in_delta(x, level)) throw Error(ErrorKind::NotInDeltaN, x.str() + " at level " + std::to_string(level));
  const std::int64_t g = x.content();
  return {g, x.det() / g};
}

AlgebraElement AlgebraElement::basis(std::int64_t level, std::int64_t l, std::int64_t m) {
  double_coset_reps(level, l, m);  // validates the label
  AlgebraElement e(level);
  e.add({l, m}, 1);
  return e;
}

void AlgebraElement::add(const Label& label, std::int64_t mult) {
  if (mult == 0) return;
  auto& slot = terms_[label];
  slot += mult;
  if (slot == 0) terms_.erase(label);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
  if (rhs.level_ != level_) throw Error(ErrorKind::UnsupportedParameter, "adding Hecke elements of different levels");
  AlgebraElement out = *this;
  for (const auto& [k, v] : rhs.terms_) out.add(k, v);
  return out;
}

AlgebraElement AlgebraElement::operator*(std::int64_t scalar) const {
  AlgebraElement out(level_);
  for (const auto& [k, v] : terms_) out.add(k, v * scalar);
  return out;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    first = false;
    if (std::llabs(v) != 1) os << std::llabs(v) << "*";
    os << "T(" << k.first << "," << k.second << ")";
  }
  return os.str();
}

AlgebraElement algebra_multiply(const AlgebraElement& u, const AlgebraElement& v) {
  if (u.level() != v.level()) throw Error(ErrorKind::UnsupportedParameter, "multiplying Hecke elements of different levels");
  const std::int64_t level = u.level();
  AlgebraElement out(level);
  for (const auto& [lu, mu] : u.terms()) {
    const auto reps_u = double_coset_reps(level, lu.first, lu.second);
    for (const auto& [lv, mv] : v.terms()) {
      const auto reps_v = double_coset_reps(level, lv.first, lv.second);
      // Each target double coset w is hit by m(u v; w) * |w| pairs.
      std::map<AlgebraElement::Label, std::int64_t> pairs;
      for (const auto& x : reps_u)
        for (const auto& y : reps_v) ++pairs[double_coset_label(x * y, level)];
      for (const auto& [w, count] : pairs) {
        const auto size = static_cast<std::int64_t>(double_coset_reps(level, w.first, w.second).size());
        if (count % size)
          throw Error(ErrorKind::UnsupportedParameter, "inconsistent coset count for T(" + std::to_string(w.first) +
                                                           "," + std::to_string(w.second) + ")");
        out.add(w, mu * mv * (count / size));
      }
    }
  }
  return out;
}

AlgebraElement t_n(std::int64_t n, std::int64_t level) {
  if (n < 1) throw Error(ErrorKind::UnsupportedParameter, "T(n) needs n >= 1");
  AlgebraElement out(level);
  for (auto a : divisors(n)) {
    const std::int64_t d = n / a;
    if (d % a == 0 && std::gcd(a, level) == 1) out.add({a, d}, 1);
  }
  return out;
}

AlgebraElement parse_algebra_element(const std::string& text, std::int64_t level) {
  AlgebraElement out(level);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&]() { return Error(ErrorKind::ParseError, "bad Hecke element '" + text + "'"); };
  std::size_t i = 0;
  if (s.empty()) throw fail();
  auto read_int = [&](std::int64_t& value) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw fail();
    value = std::stoll(s.substr(start, i - start));
  };
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::int64_t coeff = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      read_int(coeff);
      if (i >= s.size() || s[i] != '*') throw fail();
      ++i;
    }
    if (i >= s.size() || s[i] != 'T') throw fail();
    ++i;
    AlgebraElement term(level);
    if (i < s.size() && s[i] == '(') {
      ++i;
      std::int64_t l, m;
      read_int(l);
      if (i >= s.size() || s[i] != ',') throw fail();
      ++i;
      read_int(m);
      if (i >= s.size() || s[i] != ')') throw fail();
      ++i;
      term = AlgebraElement::basis(level, l, m);
    } else {
      std::int64_t n;
      read_int(n);
      term = t_n(n, level);
    }
    out = out + term * (sign * coeff);
  }
  return out;
}

}  // namespace hecke
