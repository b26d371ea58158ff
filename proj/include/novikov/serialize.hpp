#pragma once

#include "novikov/derivation.hpp"
#include "novikov/element.hpp"
#include "novikov/realization.hpp"

#include <json.hpp>

namespace novikov {

// Element:   {"terms":[{"kind":"a"|"b","index":n,"coeff":"p/q"}, ...]}
// Function:  {"terms":[{"kind":"sinh"|"cosh","index":n,"coeff":"p/q"}, ...]}
// Derivation: {"multiplier": <Element>}
// Terms are in ascending index order, b/cosh before a/sinh at equal index.
// Coefficients always carry the denominator. Readers throw
// std::invalid_argument on schema violations.

nlohmann::json to_json(const Element& x);
Element element_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FunctionRepr& f);
FunctionRepr function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MultiplierDerivation& d);
MultiplierDerivation derivation_from_json(const nlohmann::json& j);

}  // namespace novikov
