#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genmodels/formula.hpp"
#include "genmodels/interp.hpp"

namespace genmodels {

// First-order structure plus the family of sets the monadic set quantifiers
// range over. Family members are bitmasks over domain order.
struct HenkinModel {
  std::vector<std::string> domain;
  std::map<std::string, PredInterp> predicates;
  std::vector<uint64_t> family;  // sorted, unique

  int domain_index(const std::string& d) const;
  void check_invariants() const;
  bool in_family(uint64_t mask) const;
  std::string set_to_string(uint64_t mask) const;

  static std::vector<uint64_t> powerset_family(size_t domainSize);
};

// Set quantifiers range over model.family; set-variable values supplied from
// outside must be family members (SetValueNotInFamily).
bool eval_mso(const HenkinModel& model, const Formula& f,
              const std::map<std::string, int>& objAssign,
              const std::map<std::string, uint64_t>& setAssign);

// Set quantifiers range over the full powerset of the domain.
bool eval_mso_standard(const HenkinModel& model, const Formula& f,
                       const std::map<std::string, int>& objAssign,
                       const std::map<std::string, uint64_t>& setAssign);

struct TauResult {
  Formula formula;
  // MSO set variable -> predicate-sort variable, in first-occurrence order
  std::vector<std::pair<std::string, std::string>> setVarNames;
};

// Set atoms X(y) become membership atoms E(y,P); set quantifiers become
// predicate-sort quantifiers; everything first-order passes through.
TauResult tau_translate(const Formula& f);

struct TwoSortedStructure {
  std::vector<std::string> objects;
  std::vector<std::string> predPoints;
  std::set<std::pair<int, int>> e;  // (object index, predicate point index)
  std::map<std::string, PredInterp> predicates;

  int object_index(const std::string& o) const;
  int pred_point_index(const std::string& p) const;
  void check_invariants() const;
  uint64_t extension_of(int point) const;  // E-extension as object mask
};

// One predicate point per family member; E is elementhood.
TwoSortedStructure to_two_sorted(const HenkinModel& model);

bool eval_two_sorted(const TwoSortedStructure& st, const Formula& f,
                     const std::map<std::string, int>& objAssign,
                     const std::map<std::string, int>& predAssign);

struct WitnessCheck {
  bool ok = true;
  std::pair<int, int> witness = {-1, -1};
};

// Distinct predicate points must have distinct E-extensions.
WitnessCheck check_ext(const TwoSortedStructure& st);

// Distinct objects must be separated by some predicate point's extension.
WitnessCheck check_individuality(const TwoSortedStructure& st);

// Every subset of objects is the extension of some predicate point.
bool check_fullness(const TwoSortedStructure& st);

struct ComprehensionInstance {
  std::string formula;
  std::string parameters;  // rendering of the parameter assignment
  uint64_t definedSet = 0;
  bool inFamily = false;
};

struct ComprehensionReport {
  std::vector<ComprehensionInstance> instances;
  bool allPass = true;
};

// For each formula and each assignment of its parameters (free object
// variables besides `y` range over the domain, free set variables over the
// family), computes {d : φ[y:=d]} and reports membership in the family.
ComprehensionReport comprehension_check(const HenkinModel& model,
                                        const std::vector<Formula>& formulas,
                                        const std::string& y = "y");

}  // namespace genmodels
