#include "hecke/arith.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hecke {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

int moebius(std::int64_t n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

BigInt divisor_sigma(unsigned k, std::int64_t n) {
  BigInt total = 0;
  for (auto d : divisors(n)) {
    BigInt t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), k);
    total += t;
  }
  return total;
}

std::int64_t ramanujan_sum(std::int64_t c, std::int64_t m) {
  std::int64_t g = std::gcd(c, m < 0 ? -m : m);
  if (m == 0) g = c;
  std::int64_t s = 0;
  for (auto d : divisors(g)) s += moebius(c / d) * d;
  return s;
}

Rational bernoulli(unsigned n) {
  static std::mutex lock;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> guard(lock);
  // sum_{j=0}^{m} binom(m+1, j) B_j = 0
  while (table.size() <= n) {
    unsigned m = static_cast<unsigned>(table.size());
    Rational acc = 0;
    BigInt binom = 1;
    for (unsigned j = 0; j < m; ++j) {
      acc += Rational(binom) * table[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    table.push_back(-acc / Rational(m + 1));
  }
  return table[n];
}

std::int64_t gamma0_index(std::int64_t level) {
  std::int64_t mu = level;
  for (auto [p, e] : factorize(level)) mu = mu / p * (p + 1);
  return mu;
}

}  // namespace hecke
