#pragma once

#include "ncdef/cgg.hpp"
#include "ncdef/poisson.hpp"
#include "ncdef/quadalg.hpp"

#include <json.hpp>

#include <string>

namespace ncdef {

using json = nlohmann::json;

// All scalars travel as "p/q" strings.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const Tensor<Rational>& t);
Tensor<Rational> tensor_from_json(const json& j);

json to_json(const QuadraticAlgebra& a);
QuadraticAlgebra algebra_from_json(const json& j);

json to_json(const QPoly& p);
QPoly poly_from_json(const json& j);

json to_json(const QuadBracket& b);
QuadBracket bracket_from_json(const json& j);

json to_json(const OneForm& f);
OneForm oneform_from_json(const json& j);

json to_json(const QMat& m);
QMat matrix_from_json(const json& j);

json to_json(const DerivationPair& p);
DerivationPair pair_from_json(const json& j);

// Structured parse errors carry the offending file for CLI diagnostics.
json load_json_file(const std::string& path);

}  // namespace ncdef
