#pragma once

#include <json.hpp>

#include "kauffman/ratfunc.hpp"

namespace kauffman {

/// JSON form of a rational function: {"num": [[a_exp, s_exp, "coeff"], ...],
/// "den": [...]} with terms in lexicographic (a_exp, s_exp) order and
/// coefficients as decimal strings. Deterministic and exact.
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const RatFunc& f);

LaurentPoly laurent_from_json(const nlohmann::json& j);
RatFunc ratfunc_from_json(const nlohmann::json& j);

}  // namespace kauffman
