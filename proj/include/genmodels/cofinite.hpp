#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace genmodels {

// A subset of N ∪ {inf} that is either a finite subset of N, or a cofinite
// set containing inf (all of N minus a finite exclusion list, plus inf).
// These are exactly the admissible sets of the symbolic general frame, and
// they are closed under complement, union, intersection and the frame's
// diamond, so the whole modal evaluation stays inside this representation.
class CofinSet {
public:
  static CofinSet finite(std::vector<uint32_t> elems);
  static CofinSet cofinite(std::vector<uint32_t> excluded);
  static CofinSet empty() { return finite({}); }
  static CofinSet universe() { return cofinite({}); }

  bool is_cofinite() const { return cofinite_; }
  // Members when finite, exclusions when cofinite; sorted.
  const std::vector<uint32_t>& support() const { return support_; }

  bool contains(uint32_t n) const;
  bool contains_infinity() const { return cofinite_; }
  bool is_empty() const { return !cofinite_ && support_.empty(); }

  CofinSet complement() const;
  bool subset_of(const CofinSet& other) const;

  friend CofinSet set_union(const CofinSet& a, const CofinSet& b);
  friend CofinSet set_intersection(const CofinSet& a, const CofinSet& b);
  friend bool operator==(const CofinSet& a, const CofinSet& b) = default;

  std::string to_string() const;

private:
  bool cofinite_ = false;
  std::vector<uint32_t> support_;
};

// Diamond image along the Figure-1 relation {(n+1, n) : n ∈ N} ∪ {(inf, inf)}:
// a world sees something in S iff its predecessor-by-one is in S, and inf
// sees itself.
CofinSet fig1_diamond(const CofinSet& s);

struct SymbolicLfpResult {
  bool converged;
  CofinSet value;   // the fixed point, when converged
  CofinSet prefix;  // last iterate when the chain keeps growing
  int iterations;
};

// Kleene iteration from the empty set. The Figure-1 operator of interest
// grows forever through finite sets; in that case the result is flagged
// divergent with the last (finite) iterate as witness.
SymbolicLfpResult fig1_lfp_standard(const std::function<CofinSet(const CofinSet&)>& op,
                                    int maxIter);

// Least admissible pre-fixed point search, bounded by B: considers finite
// candidates with support within {0..B} and cofinite candidates with
// exclusions within {0..B}, and intersects all pre-fixed ones symbolically.
// Phase 1 iterates from the empty set: if the chain closes, its limit is the
// least pre-fixed point outright. Otherwise no finite candidate within the
// bound is pre-fixed, and phase 2 shrinks the exclusion set {0..B} to the
// largest exclusion set E with op(cofinite(E)) ⊆ cofinite(E), whose
// complement is the intersection of all bounded cofinite pre-fixed points.
CofinSet fig1_lfp_general(const std::function<CofinSet(const CofinSet&)>& op, int bound);

}  // namespace genmodels
