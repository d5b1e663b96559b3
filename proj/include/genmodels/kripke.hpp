#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace genmodels {

// Finite frame, at most 64 worlds; world sets are bitmasks over world order.
class KripkeFrame {
public:
  KripkeFrame() = default;
  KripkeFrame(std::vector<std::string> worlds,
              const std::vector<std::pair<std::string, std::string>>& rel);
  // succ[i] is the successor mask of world i.
  KripkeFrame(std::vector<std::string> worlds, std::vector<uint64_t> succ);

  size_t size() const { return worlds_.size(); }
  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::vector<uint64_t>& succ() const { return succ_; }
  uint64_t universe() const;
  int index_of(const std::string& world) const;  // -1 when absent
  bool related(int u, int v) const { return (succ_[u] >> v) & 1; }

  uint64_t diamond(uint64_t s) const;
  uint64_t box(uint64_t s) const;

  std::string set_to_string(uint64_t s) const;

private:
  std::vector<std::string> worlds_;
  std::vector<uint64_t> succ_;
};

// {x : R(x) meets s}
uint64_t diamond_image(const KripkeFrame& frame, uint64_t s);

struct AdmissibleFamily {
  bool full = false;
  std::vector<uint64_t> sets;  // sorted, unique; used when !full

  static AdmissibleFamily full_family() { return {true, {}}; }
  static AdmissibleFamily explicit_family(std::vector<uint64_t> sets);

  bool contains(uint64_t s) const;
  // Materializes the family over a frame of n worlds (full -> all subsets).
  std::vector<uint64_t> materialize(size_t n) const;
};

struct GeneralFrame {
  KripkeFrame frame;
  AdmissibleFamily family;
};

struct ClosureViolation {
  enum class Rule { NonEmpty, Complement, Intersection, Union, Diamond };
  Rule rule;
  uint64_t a = 0;
  uint64_t b = 0;        // second operand for Intersection/Union
  uint64_t missing = 0;  // the set that should be admissible but is not
};

struct FrameReport {
  std::vector<ClosureViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string(const KripkeFrame& frame) const;
};

// Checks the family is non-empty and closed under complement, intersection,
// union and the frame's diamond. Full families pass by definition.
FrameReport validate_general_frame(const GeneralFrame& gf);

struct LfpResult {
  uint64_t value;
  int iterations;
};

// Kleene iteration from the empty set; throws NonMonotoneDetected if an
// iterate ever shrinks. At most n+1 steps on an n-world frame.
LfpResult lfp_standard(const KripkeFrame& frame,
                       const std::function<uint64_t(uint64_t)>& op);

// Intersection of the admissible pre-fixed points of op; throws
// NotGeneralMuFrame when that intersection is not itself admissible or when
// no admissible pre-fixed point exists.
LfpResult lfp_general(const GeneralFrame& gf,
                      const std::function<uint64_t(uint64_t)>& op);

}  // namespace genmodels
