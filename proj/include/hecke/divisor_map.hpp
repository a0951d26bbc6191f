#pragma once

#include <cstdint>
#include <vector>

#include "hecke/curve.hpp"
#include "hecke/series.hpp"

namespace hecke {

// P (constant term first) with P(j) = f through the known range of f.
// Throws NotPolynomialInJ on a nonzero remainder or too little precision.
std::vector<Rational> weight0_to_j_polynomial(const QSeries& f);

// sum of coeffs[i] t_N^{low + i}, equal to f through its known range.
struct LaurentPolynomial {
  std::int64_t low = 0;
  std::vector<Rational> coeffs;
};
LaurentPolynomial weight0_to_hauptmodul(const QSeries& f, std::int64_t level);

// Divisor of a level-one form of the given weight, holomorphic on H, read off
// from its q-expansion through a polynomial in j.
Divisor level1_series_divisor(const QSeries& f, int weight);
// Divisor of a weight-zero function on X_0(N), N a Hauptmodul level, whose
// poles lie over infinity and the zero of t_N.
Divisor hauptmodul_series_divisor(const QSeries& f, std::int64_t level);

}  // namespace hecke
