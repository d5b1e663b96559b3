#include "genmodels/cofinite.hpp"

#include <algorithm>
#include <sstream>

#include "genmodels/errors.hpp"

namespace genmodels {

namespace {

std::vector<uint32_t> normalize(std::vector<uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<uint32_t> sorted_union(const std::vector<uint32_t>& a,
                                   const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<uint32_t> sorted_intersection(const std::vector<uint32_t>& a,
                                          const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<uint32_t> sorted_difference(const std::vector<uint32_t>& a,
                                        const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

CofinSet CofinSet::finite(std::vector<uint32_t> elems) {
  CofinSet s;
  s.cofinite_ = false;
  s.support_ = normalize(std::move(elems));
  return s;
}

CofinSet CofinSet::cofinite(std::vector<uint32_t> excluded) {
  CofinSet s;
  s.cofinite_ = true;
  s.support_ = normalize(std::move(excluded));
  return s;
}

bool CofinSet::contains(uint32_t n) const {
  bool in = std::binary_search(support_.begin(), support_.end(), n);
  return cofinite_ ? !in : in;
}

CofinSet CofinSet::complement() const {
  CofinSet s;
  s.cofinite_ = !cofinite_;
  s.support_ = support_;
  return s;
}

bool CofinSet::subset_of(const CofinSet& other) const {
  if (!cofinite_ && !other.cofinite_)
    return sorted_difference(support_, other.support_).empty();
  if (!cofinite_ && other.cofinite_)  // each member must avoid the exclusions
    return sorted_intersection(support_, other.support_).empty();
  if (cofinite_ && !other.cofinite_) return false;  // infinite vs finite
  // cofinite ⊆ cofinite: fewer exclusions means bigger set
  return sorted_difference(other.support_, support_).empty();
}

CofinSet set_union(const CofinSet& a, const CofinSet& b) {
  if (!a.cofinite_ && !b.cofinite_) return CofinSet::finite(sorted_union(a.support_, b.support_));
  if (a.cofinite_ && b.cofinite_)
    return CofinSet::cofinite(sorted_intersection(a.support_, b.support_));
  const CofinSet& fin = a.cofinite_ ? b : a;
  const CofinSet& cof = a.cofinite_ ? a : b;
  return CofinSet::cofinite(sorted_difference(cof.support_, fin.support_));
}

CofinSet set_intersection(const CofinSet& a, const CofinSet& b) {
  return set_union(a.complement(), b.complement()).complement();
}

std::string CofinSet::to_string() const {
  std::ostringstream os;
  if (cofinite_) {
    os << "N ∪ {∞}";
    if (!support_.empty()) {
      os << " \\ {";
      for (size_t i = 0; i < support_.size(); ++i) {
        if (i) os << ", ";
        os << support_[i];
      }
      os << '}';
    }
  } else {
    os << '{';
    for (size_t i = 0; i < support_.size(); ++i) {
      if (i) os << ", ";
      os << support_[i];
    }
    os << '}';
  }
  return os.str();
}

CofinSet fig1_diamond(const CofinSet& s) {
  if (!s.is_cofinite()) {
    // predecessors-by-one of the members; inf only sees itself
    std::vector<uint32_t> shifted;
    shifted.reserve(s.support().size());
    for (uint32_t n : s.support()) shifted.push_back(n + 1);
    return CofinSet::finite(std::move(shifted));
  }
  // s contains inf, so inf stays. n ∈ diamond iff n ≥ 1 and n-1 not excluded;
  // 0 has no successor, so 0 is always excluded.
  std::vector<uint32_t> excluded;
  excluded.push_back(0);
  for (uint32_t e : s.support()) excluded.push_back(e + 1);
  return CofinSet::cofinite(std::move(excluded));
}

SymbolicLfpResult fig1_lfp_standard(const std::function<CofinSet(const CofinSet&)>& op,
                                    int maxIter) {
  CofinSet cur = CofinSet::empty();
  for (int i = 0; i < maxIter; ++i) {
    CofinSet next = op(cur);
    if (!cur.subset_of(next))
      throw SemanticError(SemanticError::Code::NonMonotoneDetected,
                          "iteration shrank: the operator is not monotone");
    if (next == cur) return {true, cur, cur, i};
    cur = std::move(next);
  }
  return {false, CofinSet::empty(), cur, maxIter};
}

CofinSet fig1_lfp_general(const std::function<CofinSet(const CofinSet&)>& op, int bound) {
  if (bound < 0)
    throw SemanticError(SemanticError::Code::BoundExceeded, "search bound must be non-negative");
  // Phase 1. If the chain from ∅ closes, its limit is the least pre-fixed
  // point of all, hence the answer. A strictly growing chain of bound+2
  // steps rules out every finite pre-fixed point with support in {0..bound}:
  // the chain would have to stay inside it but strictly grows too often.
  SymbolicLfpResult it = fig1_lfp_standard(op, bound + 2);
  if (it.converged) return it.value;

  // Phase 2. Start from the largest bounded exclusion set and delete every
  // exclusion that op forces back in; the final set E is the largest one with
  // op(cofinite(E)) ⊆ cofinite(E), and every bounded cofinite pre-fixed point
  // has its exclusions inside E, so cofinite(E) is their intersection.
  std::vector<uint32_t> excluded(static_cast<size_t>(bound) + 1);
  for (uint32_t i = 0; i <= static_cast<uint32_t>(bound); ++i) excluded[i] = i;
  for (int round = 0; round <= bound + 1; ++round) {
    CofinSet cand = CofinSet::cofinite(excluded);
    CofinSet image = op(cand);
    if (image.subset_of(cand)) return cand;
    // drop every exclusion the image forces back in; any pre-fixed exclusion
    // set below the bound survives this filter, so the loop converges onto
    // the intersection of the bounded cofinite pre-fixed points
    std::vector<uint32_t> keep;
    for (uint32_t e : excluded)
      if (!image.contains(e)) keep.push_back(e);
    if (keep.size() == excluded.size())
      throw SemanticError(SemanticError::Code::BoundExceeded,
                          "exclusion shrinking stalled below the bound");
    excluded = std::move(keep);
  }
  throw SemanticError(SemanticError::Code::BoundExceeded,
                      "exclusion shrinking failed to close within the bound");
}

}  // namespace genmodels
