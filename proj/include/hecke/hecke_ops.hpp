#pragma once

#include <cstdint>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/forms.hpp"
#include "hecke/series.hpp"

namespace hecke {

// Paper: c(m) -> n^{1-k/2} sum_{d | (m,n)} d^{k-1} c(mn/d^2).
// Classical: the same without the n^{1-k/2} factor, i.e. n^{k/2-1} times Paper.
enum class AdditiveNormalization { Paper, Classical };

// Plain: f|*alpha = f((a tau + b)/d), the product used for the worked examples.
// Weighted: each factor also carries det^{k/2} d^{-k} (the weight-k slash).
// The two differ by a nonzero constant and agree in weight 0.
enum class SlashConvention { Plain, Weighted };

QSeries hecke_additive_formula(const QSeries& f, int k, std::int64_t n,
                               AdditiveNormalization norm = AdditiveNormalization::Paper);

// f((a tau + b)/d) for an upper triangular matrix, on the grid d * den(f).
CSeries slash_upper(const QSeries& f, const Matrix2& m);

// sum over representatives of det^{k/2} d^{-k} f((a tau + b)/d), projected to q^Z.
QSeries slash_sum(const QSeries& f, int k, const std::vector<Matrix2>& reps);
QSeries hecke_additive_cosets(const QSeries& f, int k, std::int64_t n, std::int64_t level);
QSeries apply_additive(const QSeries& f, int k, const AlgebraElement& u);

// prod over representatives of f|alpha, projected to q^Z; precision as propagated.
QSeries slash_product(const QSeries& f, int k, const std::vector<Matrix2>& reps,
                      SlashConvention conv = SlashConvention::Plain);

// Input precision (end exponent) needed so that the product over reps is known below q^prec.
std::int64_t multiplicative_input_end(std::int64_t order, const std::vector<std::pair<Matrix2, std::int64_t>>& reps,
                                      std::int64_t prec);

struct MultiplicativeImage {
  QSeries series;  // known below q^prec
  int weight;
  std::int64_t level;
  FormExpression as_expression() const { return FormExpression::opaque(series, weight, level); }
};

MultiplicativeImage hecke_multiplicative(const FormExpression& f, std::int64_t n, std::int64_t level,
                                         std::int64_t prec, SlashConvention conv = SlashConvention::Plain);
// f|*u = prod over terms T(l,m)^{mult} of the product over that double coset.
MultiplicativeImage apply_multiplicative(const FormExpression& f, const AlgebraElement& u, std::int64_t prec,
                                         SlashConvention conv = SlashConvention::Plain);

}  // namespace hecke
