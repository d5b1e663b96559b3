#include "genmodels/kripke.hpp"

#include <algorithm>
#include <sstream>

#include "genmodels/errors.hpp"

namespace genmodels {

namespace {

void check_world_count(size_t n) {
  if (n == 0) throw SemanticError(SemanticError::Code::InvalidModel, "frame needs at least one world");
  if (n > 64)
    throw SemanticError(SemanticError::Code::CapExceeded,
                        "explicit frames support at most 64 worlds, got " + std::to_string(n));
}

}  // namespace

KripkeFrame::KripkeFrame(std::vector<std::string> worlds,
                         const std::vector<std::pair<std::string, std::string>>& rel)
    : worlds_(std::move(worlds)), succ_(worlds_.size(), 0) {
  check_world_count(worlds_.size());
  for (size_t i = 0; i < worlds_.size(); ++i)
    for (size_t j = i + 1; j < worlds_.size(); ++j)
      if (worlds_[i] == worlds_[j])
        throw SemanticError(SemanticError::Code::InvalidModel, "duplicate world: " + worlds_[i]);
  for (const auto& [u, v] : rel) {
    int ui = index_of(u), vi = index_of(v);
    if (ui < 0 || vi < 0)
      throw SemanticError(SemanticError::Code::InvalidModel,
                          "relation mentions unknown world: " + (ui < 0 ? u : v));
    succ_[ui] |= uint64_t{1} << vi;
  }
}

KripkeFrame::KripkeFrame(std::vector<std::string> worlds, std::vector<uint64_t> succ)
    : worlds_(std::move(worlds)), succ_(std::move(succ)) {
  check_world_count(worlds_.size());
  if (succ_.size() != worlds_.size())
    throw SemanticError(SemanticError::Code::InvalidModel, "successor table size mismatch");
  for (uint64_t m : succ_)
    if (m & ~universe())
      throw SemanticError(SemanticError::Code::InvalidModel, "successor mask out of range");
}

uint64_t KripkeFrame::universe() const {
  size_t n = worlds_.size();
  return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

int KripkeFrame::index_of(const std::string& world) const {
  for (size_t i = 0; i < worlds_.size(); ++i)
    if (worlds_[i] == world) return static_cast<int>(i);
  return -1;
}

uint64_t KripkeFrame::diamond(uint64_t s) const {
  uint64_t out = 0;
  for (size_t i = 0; i < succ_.size(); ++i)
    if (succ_[i] & s) out |= uint64_t{1} << i;
  return out;
}

uint64_t KripkeFrame::box(uint64_t s) const { return universe() & ~diamond(universe() & ~s); }

std::string KripkeFrame::set_to_string(uint64_t s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (size_t i = 0; i < worlds_.size(); ++i) {
    if (!((s >> i) & 1)) continue;
    if (!first) os << ", ";
    first = false;
    os << worlds_[i];
  }
  os << '}';
  return os.str();
}

uint64_t diamond_image(const KripkeFrame& frame, uint64_t s) { return frame.diamond(s); }

AdmissibleFamily AdmissibleFamily::explicit_family(std::vector<uint64_t> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return {false, std::move(sets)};
}

bool AdmissibleFamily::contains(uint64_t s) const {
  if (full) return true;
  return std::binary_search(sets.begin(), sets.end(), s);
}

std::vector<uint64_t> AdmissibleFamily::materialize(size_t n) const {
  if (!full) return sets;
  if (n > 20)
    throw SemanticError(SemanticError::Code::CapExceeded,
                        "refusing to materialize the full family over " + std::to_string(n) +
                            " worlds");
  std::vector<uint64_t> out(size_t{1} << n);
  for (size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::string FrameReport::to_string(const KripkeFrame& frame) const {
  if (ok()) return "general frame ok";
  std::ostringstream os;
  for (const auto& v : violations) {
    switch (v.rule) {
      case ClosureViolation::Rule::NonEmpty:
        os << "family is empty";
        break;
      case ClosureViolation::Rule::Complement:
        os << "complement of " << frame.set_to_string(v.a) << " missing: "
           << frame.set_to_string(v.missing);
        break;
      case ClosureViolation::Rule::Intersection:
        os << "intersection of " << frame.set_to_string(v.a) << " and "
           << frame.set_to_string(v.b) << " missing: " << frame.set_to_string(v.missing);
        break;
      case ClosureViolation::Rule::Union:
        os << "union of " << frame.set_to_string(v.a) << " and " << frame.set_to_string(v.b)
           << " missing: " << frame.set_to_string(v.missing);
        break;
      case ClosureViolation::Rule::Diamond:
        os << "diamond image of " << frame.set_to_string(v.a) << " missing: "
           << frame.set_to_string(v.missing);
        break;
    }
    os << '\n';
  }
  return os.str();
}

FrameReport validate_general_frame(const GeneralFrame& gf) {
  FrameReport report;
  if (gf.family.full) return report;
  const auto& sets = gf.family.sets;
  uint64_t universe = gf.frame.universe();
  if (sets.empty()) {
    report.violations.push_back({ClosureViolation::Rule::NonEmpty, 0, 0, 0});
    return report;
  }
  for (uint64_t s : sets) {
    if (s & ~universe)
      throw SemanticError(SemanticError::Code::InvalidModel, "family set mentions unknown worlds");
    uint64_t c = universe & ~s;
    if (!gf.family.contains(c))
      report.violations.push_back({ClosureViolation::Rule::Complement, s, 0, c});
    uint64_t d = gf.frame.diamond(s);
    if (!gf.family.contains(d))
      report.violations.push_back({ClosureViolation::Rule::Diamond, s, 0, d});
    for (uint64_t t : sets) {
      uint64_t m = s & t;
      if (!gf.family.contains(m))
        report.violations.push_back({ClosureViolation::Rule::Intersection, s, t, m});
      uint64_t u = s | t;
      if (!gf.family.contains(u))
        report.violations.push_back({ClosureViolation::Rule::Union, s, t, u});
    }
  }
  return report;
}

LfpResult lfp_standard(const KripkeFrame& frame, const std::function<uint64_t(uint64_t)>& op) {
  uint64_t cur = 0;
  int steps = 0;
  int limit = static_cast<int>(frame.size()) + 1;
  for (; steps <= limit; ++steps) {
    uint64_t next = op(cur) & frame.universe();
    if ((cur & ~next) != 0)
      throw SemanticError(SemanticError::Code::NonMonotoneDetected,
                          "iteration shrank: the operator is not monotone");
    if (next == cur) return {cur, steps};
    cur = next;
  }
  throw SemanticError(SemanticError::Code::NonMonotoneDetected,
                      "iteration failed to close within |worlds|+1 steps");
}

LfpResult lfp_general(const GeneralFrame& gf, const std::function<uint64_t(uint64_t)>& op) {
  if (gf.family.full) {
    LfpResult r = lfp_standard(gf.frame, op);
    return r;
  }
  uint64_t universe = gf.frame.universe();
  uint64_t acc = universe;
  bool found = false;
  int scanned = 0;
  for (uint64_t s : gf.family.sets) {
    ++scanned;
    if ((op(s) & universe & ~s) == 0) {  // pre-fixed point
      acc &= s;
      found = true;
    }
  }
  if (!found)
    throw SemanticError(SemanticError::Code::NotGeneralMuFrame,
                        "no admissible pre-fixed point exists");
  if (!gf.family.contains(acc))
    throw SemanticError(SemanticError::Code::NotGeneralMuFrame,
                        "least fixed point " + gf.frame.set_to_string(acc) +
                            " is not admissible: not a general mu-frame for this operator");
  return {acc, scanned};
}

}  // namespace genmodels
