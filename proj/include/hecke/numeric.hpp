#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <complex>
#include <cstdint>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/series.hpp"

namespace hecke {

// 100 significant decimal digits; used for CM values and fibre inversion.
using Real = boost::multiprecision::cpp_bin_float_100;
using Complex = boost::multiprecision::cpp_complex_100;

Real pi_real();
Complex to_complex(const Real& re, const Real& im);
Real rational_to_real(const Rational& r);
std::complex<double> to_double(const Complex& z);

// Moebius action of an integer matrix.
Complex mobius(const Matrix2& m, const Complex& tau);

// tau reduced to the level-one fundamental domain together with g in SL_2(Z),
// g tau = reduced. Boundary convention follows the exact reduction.
struct NumericReduction {
  Complex tau;
  Matrix2 witness;
};
NumericReduction reduce_numeric(const Complex& tau);

// Dedekind eta anywhere in the upper half plane.
Complex eta(const Complex& tau);
// Classical j via Eisenstein series (tau reduced internally).
Complex j_value(const Complex& tau);
// (eta(tau)/eta(N tau))^{24/(N-1)}.
Complex hauptmodul_value(std::int64_t level, const Complex& tau);
// Sum c_m q^m of a series on the integral grid; throws PrecisionExhausted
// unless the terms have decayed below 10^{-digits} relative to the sum.
Complex eval_series(const QSeries& f, const Complex& tau, int digits);

// A point of the fundamental domain with j(tau) = value.
Complex j_inverse(const Complex& value);
// A point of H with t_N(tau) = value, or throws ConvergenceBudgetExceeded.
Complex hauptmodul_inverse(std::int64_t level, const Complex& value);

// Integral primitive (A, B, C), A > 0, with A tau^2 + B tau + C = 0, if one with
// A <= max_a reproduces tau to within 10^{-tol_digits}.
bool recognize_quadratic(const Complex& tau, std::int64_t max_a, int tol_digits, std::int64_t out[3]);

// All complex roots of a polynomial with rational coefficients (constant term
// first), with multiplicities, via square-free factorisation and Aberth iteration.
struct PolynomialRoot {
  Complex value;
  int multiplicity;
  bool rational;
  Rational exact;  // valid when rational
};
std::vector<PolynomialRoot> polynomial_roots(const std::vector<Rational>& coeffs);

}  // namespace hecke
