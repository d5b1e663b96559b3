#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genmodels/formula.hpp"
#include "genmodels/kripke.hpp"

namespace genmodels {

// Raw operation tables, indexed by carrier order, as found in input files.
struct AlgebraTables {
  std::vector<std::string> carrier;
  std::vector<std::vector<int>> join;
  std::vector<std::vector<int>> meet;
  std::vector<int> neg;
  int bot = 0;
  int top = 0;
  std::vector<int> diamond;
};

struct AlgebraReport {
  bool ok = true;
  std::string violation;  // first violated axiom with witness elements
};

// Checks the Boolean-algebra axioms (commutativity, associativity,
// absorption, identities, distributivity, complements) plus normality of
// diamond. Malformed table shapes throw InvalidAlgebra; axiom violations are
// reported. The serial walk stops at the first violation; the parallel walk
// scans index blocks with OpenMP and reports the least-index violation, so
// both return the same answer.
AlgebraReport validate_modal_algebra(const AlgebraTables& t);
AlgebraReport validate_modal_algebra_parallel(const AlgebraTables& t);

// A validated algebra. Construction runs the axiom check (parallel for large
// carriers) and throws InvalidAlgebra on failure.
class ModalAlgebra {
public:
  static ModalAlgebra from_tables(AlgebraTables t);

  size_t size() const { return tables_.carrier.size(); }
  const std::string& name(int a) const { return tables_.carrier[a]; }
  const AlgebraTables& tables() const { return tables_; }
  int join(int a, int b) const { return tables_.join[a][b]; }
  int meet(int a, int b) const { return tables_.meet[a][b]; }
  int neg(int a) const { return tables_.neg[a]; }
  int dia(int a) const { return tables_.diamond[a]; }
  int bot() const { return tables_.bot; }
  int top() const { return tables_.top; }
  bool leq(int a, int b) const { return meet(a, b) == a; }

private:
  explicit ModalAlgebra(AlgebraTables t) : tables_(std::move(t)) {}
  AlgebraTables tables_;
};

// Powerset algebra of a frame: carrier = all world-sets in mask order,
// diamond = existential preimage along R.
ModalAlgebra complex_algebra(const KripkeFrame& frame, size_t maxWorlds = 10);

// Subalgebra of the complex algebra carried by an explicit admissible family.
ModalAlgebra algebra_of_general_frame(const GeneralFrame& gf);

// Elements minimal above bottom.
std::vector<int> atoms(const ModalAlgebra& a);

struct Ultrafilter {
  int atom;                   // generating atom
  std::vector<int> elements;  // {b : atom ≤ b}
};

// One ultrafilter per atom; a finite Boolean algebra has no others.
std::vector<Ultrafilter> ultrafilters(const ModalAlgebra& a);

// Worlds = ultrafilters ("u0", "u1", ... in atom order); x R y iff a ∈ y
// implies ◊a ∈ x for every a; family = {φ(a) : a in carrier} where
// φ(a) = set of ultrafilters containing a.
GeneralFrame ultrafilter_frame(const ModalAlgebra& a);

struct IsoCheck {
  bool ok = true;
  std::vector<int> map;  // carrier index -> carrier index of the double dual
  std::string detail;    // first discrepancy, when !ok
};

// Verifies a ↦ φ(a) is an isomorphism onto the algebra of the ultrafilter
// general frame.
IsoCheck jt_iso_check(const ModalAlgebra& a);

struct DescriptiveReport {
  bool differentiated = true;
  bool tight = true;
  bool compact = true;
  std::optional<std::pair<int, int>> differentiatedWitness;  // unseparated pair
  std::optional<std::pair<int, int>> tightWitness;           // unwitnessed non-edge
  std::string note;
};

DescriptiveReport is_descriptive(const GeneralFrame& gf);

// Evaluates a modal/mu formula inside the algebra under a letter assignment;
// mu is the meet of the pre-fixed elements, nu its complement-dual.
int algebraic_mu(const ModalAlgebra& a, const Formula& f,
                 const std::map<std::string, int>& letters,
                 const std::map<std::string, int>& env = {});

}  // namespace genmodels
