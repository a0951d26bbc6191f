#pragma once

#include <json.hpp>

#include "hecke/algebra.hpp"
#include "hecke/curve.hpp"
#include "hecke/divisor_sums.hpp"
#include "hecke/forms.hpp"
#include "hecke/niebur.hpp"
#include "hecke/series.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

// Series: {"D", "order", "precision", "coeffs"}; coefficient i sits at (order + i)/D,
// precision = number of coefficients, so everything below (order + precision)/D is known.
Json to_json(const QSeries& f);
Json to_json(const CSeries& f);
QSeries qseries_from_json(const Json& j);
CSeries cseries_from_json(const Json& j);

// {"N", "terms": [{"a", "d", "mult"}]}
Json to_json(const AlgebraElement& u);
AlgebraElement algebra_from_json(const Json& j);

// {"atoms": [{"type", "params", "exp"}], "weight", "level"}
Json to_json(const FormExpression& f);
FormExpression form_from_json(const Json& j);

// {"N", "interior": [{"A", "B", "C", "coeff"}], "cusps": [{"cusp", "coeff"}],
//  "fibers": [{"level", "value", "coeff"}], "numeric": [{"re", "im", "label", "coeff"}]}
Json to_json(const Divisor& d);
Divisor divisor_from_json(const Json& j);

// Complex as ["re", "im"] decimal strings with enough digits to re-read exactly.
Json to_json(const Complex& z);
Complex complex_from_json(const Json& j);
std::string real_to_string(const Real& x);

Json to_json(const EvalParams& p);
EvalParams params_from_json(const Json& j);
// {"value": ["re", "im"], "error", "C"}
Json to_json(const PointValue& v, const EvalParams& p);
Json to_json(const PairingResult& r);
Json to_json(const EvalReport& r);
EvalReport report_from_json(const Json& j);

}  // namespace hecke
