#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace genmodels {

struct BinaryRelation {
  std::vector<std::string> universe;
  std::set<std::pair<int, int>> pairs;

  int index_of(const std::string& u) const;
  void check_invariants() const;
};

struct KtResult {
  std::set<int> value;
  int iterations;
};

// Kleene iteration from ∅ over subsets of {0..universeSize-1}. Asserts the
// |U|+1 iteration bound and that iterates never shrink.
KtResult kt_lfp(int universeSize,
                const std::function<std::set<int>(const std::set<int>&)>& op);

// Least fixed point of F(X) = R ∪ (X∘R) over the lattice of subrelations;
// composition X∘R = {(x,y) : some z with (x,z) ∈ X and (z,y) ∈ R}.
BinaryRelation transitive_closure_fp(const BinaryRelation& r);

// Is there an R-path from x to y with at least one edge?
bool path_oracle(const BinaryRelation& r, int x, int y);

}  // namespace genmodels
