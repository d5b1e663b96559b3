#pragma once

#include <nlohmann/json.hpp>

#include "genmodels/formula.hpp"

namespace genmodels {

std::string kind_to_string(Kind k);
Kind kind_from_string(const std::string& s);

// Schema: {"kind": ..., "name"?: ..., "args"?: [...], "kids"?: [...]}.
// from_json checks tree shape (arity per kind) but is language-agnostic;
// callers validate with check_wellformed where a language is fixed.
nlohmann::json formula_to_json(const Formula& f);
Formula formula_from_json(const nlohmann::json& j);

}  // namespace genmodels
