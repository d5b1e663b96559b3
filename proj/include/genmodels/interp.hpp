#pragma once

#include <set>
#include <vector>

namespace genmodels {

// Interpretation of one predicate constant: tuples of domain indices.
struct PredInterp {
  int arity = 0;
  std::set<std::vector<int>> tuples;

  bool holds(const std::vector<int>& tuple) const { return tuples.count(tuple) != 0; }
};

}  // namespace genmodels
