#pragma once

#include <map>
#include <string>

#include "genmodels/cofinite.hpp"
#include "genmodels/formula.hpp"
#include "genmodels/kripke.hpp"

namespace genmodels {

enum class Semantics { Standard, General };

Semantics semantics_from_string(const std::string& s);

// Finite model over a general frame. Construction validates family closure
// and requires every valuation value to be admissible.
class ModalModel {
public:
  ModalModel(GeneralFrame gf, std::map<std::string, uint64_t> valuation);

  const GeneralFrame& general_frame() const { return gf_; }
  const KripkeFrame& frame() const { return gf_.frame; }
  const std::map<std::string, uint64_t>& valuation() const { return valuation_; }

private:
  GeneralFrame gf_;
  std::map<std::string, uint64_t> valuation_;
};

// Compositional evaluation. Standard semantics computes mu by Kleene
// iteration over the full powerset; general semantics intersects admissible
// pre-fixed points and demands the result be admissible (NotAdmissible
// otherwise). nu is evaluated as the dual: complement of the least fixed
// point of the complement-conjugated operator.
uint64_t extension(const ModalModel& model, const Formula& f, Semantics sem,
                   const std::map<std::string, uint64_t>& env = {});

// Model over the symbolic frame: worlds N ∪ {inf}, relation n+1 → n plus a
// reflexive loop at inf, admissible sets = finite subsets of N and cofinite
// sets containing inf. `bound` limits the pre-fixed point search.
struct Fig1Model {
  std::map<std::string, CofinSet> valuation;
  int bound = 64;
};

// As above on the symbolic frame. Standard-semantics mu whose iteration does
// not close within the bound raises DivergentLfp carrying the last finite
// iterate in the message; the general semantics searches admissible
// pre-fixed points within the bound instead.
CofinSet extension(const Fig1Model& model, const Formula& f, Semantics sem,
                   const std::map<std::string, CofinSet>& env = {});

}  // namespace genmodels
