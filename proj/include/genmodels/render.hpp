#pragma once

#include <string>

#include "genmodels/formula.hpp"

namespace genmodels {

// Produces concrete syntax that parses back to the same tree. Binder bodies
// are maximal in the grammar, so binders in operand position are wrapped in
// parentheses; compound binder bodies get parentheses for readability.
std::string render(const Formula& f);

}  // namespace genmodels
