#pragma once
// Independent reference computations for the unit tests. Deliberately naive.

#include <cstdint>
#include <vector>

#include "hecke/rational.hpp"

namespace oracle {

using hecke::BigInt;
using hecke::Rational;

inline BigInt sigma(unsigned k, std::int64_t n) {
  BigInt s = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) {
      BigInt p = 1;
      for (unsigned i = 0; i < k; ++i) p *= d;
      s += p;
    }
  return s;
}

// Coefficients of q^0..q^{len-1} of prod_{n>=1} (1 - q^n)^power, power >= 0.
inline std::vector<BigInt> euler_power(std::int64_t len, int power) {
  std::vector<BigInt> v(static_cast<std::size_t>(len), 0);
  v[0] = 1;
  for (std::int64_t n = 1; n < len; ++n)
    for (int r = 0; r < power; ++r)
      for (std::int64_t i = len - 1; i >= n; --i) v[static_cast<std::size_t>(i)] -= v[static_cast<std::size_t>(i - n)];
  return v;
}

// Delta coefficients tau(1..len).
inline std::vector<BigInt> ramanujan_tau(std::int64_t len) {
  auto e = euler_power(len, 24);
  std::vector<BigInt> t(static_cast<std::size_t>(len + 1), 0);
  for (std::int64_t i = 0; i < len; ++i) t[static_cast<std::size_t>(i + 1)] = e[static_cast<std::size_t>(i)];
  return t;
}

}  // namespace oracle
