#pragma once

#include <cstdint>

#include "hecke/curve.hpp"
#include "hecke/numeric.hpp"
#include "hecke/series.hpp"

namespace hecke {

struct EvalParams {
  std::int64_t C = 300;       // c runs over multiples of N up to C * N
  int digits = 50;            // target digits for power series and CM values
  double s = 1.5;             // real, > 1
  std::int64_t window = 1000; // |c u + d| summed exactly per c, at least 4 c v
  double tolerance = 0;       // > 0: throw ConvergenceBudgetExceeded above it
  bool reduce = true;         // move tau up in its Gamma_0(N) orbit first
};

struct PointValue {
  Complex value;
  double error = 0;
};

// Power series sum_k (x/2)^{2k+nu} / (k! Gamma(k+nu+1)), nu > -1.
Real i_bessel(const Real& nu, const Real& x, int digits = 50);
double i_bessel(double nu, double x);

// 2 pi sqrt(m v) I_{s-1/2}(2 pi m v), and v^s for m = 0.
Real phi(std::int64_t m, const Real& v, const Real& s, int digits = 50);

// sum over Gamma_0(N)_inf \ Gamma_0(N) of phi_m(Im g tau, s) e(-m Re g tau).
// The identity term is summed in 100-digit arithmetic, the rest in double
// with an Euler-Maclaurin tail per residue class and a closed-form c-tail.
PointValue niebur_value(std::int64_t level, std::int64_t m, const Complex& tau, const EvalParams& params);
inline PointValue eisenstein_value(std::int64_t level, const Complex& tau, const EvalParams& params) {
  return niebur_value(level, 0, tau, params);
}

// A point of the Gamma_0(N)-orbit of tau with locally maximal imaginary part.
Complex reduce_gamma0(const Complex& tau, std::int64_t level);

// j_n at tau (reduced internally) from its q-expansion.
Complex jn_value(std::int64_t n, const Complex& tau, int digits = 50);
inline Complex jn_value(std::int64_t n, const HeegnerPoint& z, int digits = 50) {
  return jn_value(n, z.value(), digits);
}

// q^{-m} + O(q) on Gamma_0(N) as a polynomial in the Hauptmodul, constant 0;
// known below q^prec.
QSeries harmonic_slice(std::int64_t level, std::int64_t m, std::int64_t prec);

}  // namespace hecke
