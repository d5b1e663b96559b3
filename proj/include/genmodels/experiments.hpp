#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace genmodels {

// Every suite is one kernel driven two ways: a plain serial loop (the
// reference) and an OpenMP loop over the same index space. Failure lists come
// back in index order in both modes, so the two drivers are comparable
// byte for byte.
enum class RunMode { Serial, Parallel };

struct ExperimentConfig {
  RunMode mode = RunMode::Parallel;
  int confluenceMaxStates = 3;  // exhaustive regime, 1..3
  int symbolicBound = 64;       // finite/cofinite pre-fixed point search bound
  uint64_t seed = 2026;         // randomized phases are reproducible from this
  int samples = 200;            // deep random formulas / digraphs per sampled phase
};

struct SuiteReport {
  std::string name;
  long long checked = 0;
  std::vector<std::string> failures;
  double seconds = 0.0;

  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

// Symbolic frame: the standard fixpoint iteration climbs through finite
// initial segments forever while the general fixpoint lands on the cofinite
// set with empty exclusion.
SuiteReport run_figure1(const ExperimentConfig& cfg = {});

// Every complex algebra of every frame with <= 3 worlds, and every normal
// diamond on the powerset of <= 3 atoms: the canonical map into the algebra
// of the ultrafilter frame is an isomorphism, and for complex algebras the
// ultrafilter frame is the original frame again.
SuiteReport run_jt_roundtrip(const ExperimentConfig& cfg = {});

// All two-relation frames with <= confluenceMaxStates states: validity of
// the re-assignment axiom coincides with Church-Rosser confluence.
SuiteReport run_confluence(const ExperimentConfig& cfg = {});

// Guarded translation faithfulness on all small assignment models: evaluation
// restricted to admissible assignments equals classical evaluation of the
// guard-relativized formula, and every translation output is guarded.
SuiteReport run_guarded_faithfulness(const ExperimentConfig& cfg = {});

// Monadic second-order truth over a set family equals two-sorted first-order
// truth of the membership translation; with the full powerset family the
// structure is full and the standard evaluator agrees.
SuiteReport run_tau_correspondence(const ExperimentConfig& cfg = {});

// The fixed two-point model where simultaneous re-assignment outruns iterated
// single quantifiers.
SuiteReport run_polyadic_regression(const ExperimentConfig& cfg = {});

// Replacing every "exists" with "extension-diamond then exists" recovers
// classical truth at any admissible assignment set.
SuiteReport run_ext_embedding(const ExperimentConfig& cfg = {});

// Fixpoint transitive closure vs a path-search oracle, exhaustive on <= 3
// nodes plus seeded random digraphs; the iteration bound is asserted inside.
SuiteReport run_closure_oracle(const ExperimentConfig& cfg = {});

// With full families and full assignment spaces every generalized evaluator
// collapses to its standard counterpart.
SuiteReport run_conservativity(const ExperimentConfig& cfg = {});

const std::vector<std::string>& suite_names();

// Dispatch by name; throws InputError for unknown names.
SuiteReport run_suite(const std::string& name, const ExperimentConfig& cfg = {});

}  // namespace genmodels
