#include "hecke/series.hpp"

namespace hecke {

namespace {

template <class C, class ToRational>
QSeries project(const Series<C>& f, ToRational to_rational) {
  const std::int64_t den = f.den();
  const std::int64_t end = f.end() >= 0 ? (f.end() + den - 1) / den : -((-f.end()) / den);
  if (f.is_zero()) return QSeries::zero(end);
  std::int64_t first = f.order() >= 0 ? (f.order() + den - 1) / den : -((-f.order()) / den);
  std::vector<Rational> v;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const std::int64_t e = f.order() + static_cast<std::int64_t>(i);
    const C& c = f.coeffs()[i];
    if (mod_floor(e, den) != 0) {
      if (!is_zero(c))
        throw Error(ErrorKind::NotIntegralSeries,
                    "nonzero coefficient at exponent " + std::to_string(e) + "/" + std::to_string(den));
      continue;
    }
    v.push_back(to_rational(c, e));
  }
  return QSeries::from_coeffs(first, std::move(v)).truncated(end);
}

}  // namespace

QSeries integral_projection(const QSeries& f) {
  return project(f, [](const Rational& c, std::int64_t) { return c; });
}

QSeries integral_projection(const CSeries& f) {
  return project(f, [&f](const Cyclotomic& c, std::int64_t e) {
    if (!c.is_rational())
      throw Error(ErrorKind::NotIntegralSeries,
                  "irrational cyclotomic coefficient at exponent " + std::to_string(e) + "/" + std::to_string(f.den()));
    return c.rational_value();
  });
}

}  // namespace hecke
