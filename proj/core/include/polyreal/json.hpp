#pragma once

#include <nlohmann/json.hpp>

#include "polyreal/cyclo.hpp"

namespace polyreal {

/// {"order": n, "coeffs": ["p/q", ...]} against zumbroich_basis(n).
nlohmann::json cyclo_to_json(const Cyclo& x);
/// Throws ParseError on malformed input.
Cyclo cyclo_from_json(const nlohmann::json& j);

}  // namespace polyreal
