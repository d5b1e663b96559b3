#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "genmodels/formula.hpp"

namespace genmodels {

// Formula space for an exhaustive or randomized sweep: a set of atoms plus
// the language's unary shapes (modalities, quantifier bindings). Negation
// and the three binary connectives are always in play. Results may include
// ill-formed trees (a non-positive mu body, say); sweeps filter with
// check_wellformed.
struct FormulaGrammar {
  std::vector<Formula> atoms;
  std::vector<std::function<Formula(const Formula&)>> wrappers;

  // Every formula of syntactic depth <= depth, each tree shape exactly once,
  // in a deterministic order. Counts grow as ~3*N^2 per level; depth 2 over
  // a handful of atoms is the practical ceiling.
  std::vector<Formula> up_to_depth(int depth) const;

  // `count` formulas of depth exactly `depth`, reproducible from the seed.
  std::vector<Formula> samples(int count, int depth, uint64_t seed) const;
};

}  // namespace genmodels
