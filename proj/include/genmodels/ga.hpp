#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "genmodels/formula.hpp"
#include "genmodels/interp.hpp"

namespace genmodels {

// First-order structure with an explicit set of admissible assignments.
// Assignments are tuples over a declared variable universe, in order.
struct GAModel {
  std::vector<std::string> domain;
  std::map<std::string, PredInterp> predicates;
  std::vector<std::string> variables;
  std::set<std::vector<int>> assignments;

  int domain_index(const std::string& d) const;
  // Throws VariableOutsideUniverse for unknown variables.
  int var_index(const std::string& v) const;
  void check_invariants() const;
  size_t tuple_space_size() const;
};

struct ExtDiamondConfig {
  size_t maxTupleSpace = 64;  // |domain|^n cap for the superset search
  int maxMissingTuples = 20;  // 2^missing supersets get enumerated
};

// Quantifiers move only inside model.assignments: Exists(x, f) looks for an
// admissible x-variant, PolyExists re-assigns its whole tuple in one step,
// ExtDiamond(f) asks for a superset V' of the assignment set satisfying f.
// The assignment `s` must be admissible.
bool eval_ga(const GAModel& model, const Formula& f, const std::vector<int>& s,
             const ExtDiamondConfig& cfg = {});

// Classical Tarskian evaluation; model.assignments is ignored (full space),
// so PolyExists degenerates to iterated quantification and ExtDiamond(f) to f.
bool eval_standard_fol(const GAModel& model, const Formula& f, const std::vector<int>& s);

// Named entry point for formulas using the extension modality.
bool eval_extension_modality(const GAModel& model, const Formula& f, const std::vector<int>& s,
                             const ExtDiamondConfig& cfg = {});

// States with one transition relation per variable; the modal view of
// assignment change.
struct AbstractAssignmentFrame {
  std::vector<std::string> states;
  std::map<std::string, std::vector<uint64_t>> transitions;  // var -> succ masks
  std::map<std::string, uint64_t> atomValuations;            // optional, for experiments

  int state_index(const std::string& s) const;
  const std::vector<uint64_t>& relation(const std::string& var) const;
};

struct ConfluenceResult {
  bool confluent = true;
  int s = -1, t = -1, u = -1;  // counterexample when !confluent
};

// Church-Rosser: s ->x t and s ->y u must close with some v, t ->y v, u ->x v.
ConfluenceResult check_confluence(const AbstractAssignmentFrame& frame, const std::string& x,
                                  const std::string& y);

// Truth of "exists x. forall y. S -> forall y. exists x. S" at every state
// under every valuation of the atom S. Equivalent to confluence of the two
// relations; the correspondence experiment cross-checks exactly that.
bool confluence_axiom_valid(const AbstractAssignmentFrame& frame, const std::string& x,
                            const std::string& y);

// The frame whose states are the admissible assignments of a GAModel and
// whose x-transition links x-variants.
AbstractAssignmentFrame assignment_space_frame(const GAModel& model);

struct CorrespondenceReport {
  long long framesChecked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// For every two-relation frame with up to maxStates states, brute-forces the
// axiom "exists x. forall y. S -> forall y. exists x. S" over all valuations
// of S and compares frame validity with check_confluence.
CorrespondenceReport correspondence_experiment(int maxStates);

struct GuardedTranslation {
  Formula formula;
  std::string guard;  // fresh guard predicate name
};

// Relativizes every quantifier by a fresh guard atom over the whole variable
// universe; on models where the guard is interpreted as the admissible
// assignment set, standard evaluation of the output matches eval_ga.
GuardedTranslation translate_guarded(const Formula& f,
                                     const std::vector<std::string>& varUniverse);

}  // namespace genmodels
