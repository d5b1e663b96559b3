#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace genmodels {

// Four object languages share one immutable AST. A formula is well-formed
// only relative to a Language; check_wellformed enforces the per-language
// kind and namespace rules (object variables lowercase, set/fixpoint
// variables uppercase, two-sorted predicate variables 'P'-prefixed).
enum class Language { Modal, Fol, Mso, TwoSorted };

enum class Kind {
  // shared connectives
  Not,
  And,
  Or,
  Implies,
  // modal / mu-calculus
  PropLetter,  // name
  FixVar,      // name
  Diamond,
  Box,
  Mu,  // name = bound fixpoint variable
  Nu,
  // first-order
  PredAtom,    // name = predicate, args = variables
  Equal,       // args = {lhs, rhs}
  Exists,      // name = bound variable (object sort, or pred sort when 'P'-prefixed)
  Forall,
  PolyExists,  // args = simultaneously re-bound tuple
  ExtDiamond,  // family-extension modality
  // monadic second-order
  SetAtom,     // name = set variable, args = {object variable}
  ExistsSet,   // name = bound set variable
  ForallSet,
  // two-sorted first-order view
  EAtom,  // args = {object variable, predicate variable}
};

class Node;
using Formula = std::shared_ptr<const Node>;

class Node {
public:
  Kind kind;
  std::string name;
  std::vector<std::string> args;
  std::vector<Formula> kids;

  Node(Kind k, std::string n, std::vector<std::string> a, std::vector<Formula> c)
      : kind(k), name(std::move(n)), args(std::move(a)), kids(std::move(c)) {}
};

// Factories.
Formula prop(const std::string& name);
Formula fixvar(const std::string& name);
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula impl(Formula a, Formula b);
Formula diamond(Formula f);
Formula box(Formula f);
Formula mu(const std::string& var, Formula body);
Formula nu(const std::string& var, Formula body);
Formula pred(const std::string& name, const std::vector<std::string>& args);
Formula eq(const std::string& lhs, const std::string& rhs);
Formula exists(const std::string& var, Formula body);
Formula forall(const std::string& var, Formula body);
Formula poly_exists(const std::vector<std::string>& vars, Formula body);
Formula ext_dia(Formula f);
Formula set_atom(const std::string& setVar, const std::string& objVar);
Formula exists_set(const std::string& var, Formula body);
Formula forall_set(const std::string& var, Formula body);
Formula e_atom(const std::string& objVar, const std::string& predVar);

bool structurally_equal(const Formula& a, const Formula& b);

// Name classification. Object variables start lowercase; set and fixpoint
// variables start uppercase; the two-sorted predicate sort is the 'P'-prefixed
// subspace of the uppercase names.
bool is_object_var(const std::string& name);
bool is_upper_var(const std::string& name);
bool is_pred_sort_var(const std::string& name);

struct FreeVars {
  std::set<std::string> objects;
  std::set<std::string> sets;    // MSO set variables
  std::set<std::string> preds;   // two-sorted predicate-sort variables
  std::set<std::string> fixpoints;
  std::set<std::string> letters;
};
FreeVars free_variables(const Formula& f);

// All free object-sort variables, the common case.
std::set<std::string> free_object_vars(const Formula& f);

// True when every free occurrence of `var` sits under an even number of
// polarity flips (Not, and the antecedent side of Implies).
bool is_positive_in(const Formula& f, const std::string& var);

// Throws SemanticError{InvalidFormula} on any violation of the language's
// kind set, namespace rules, or mu/nu positivity.
void check_wellformed(Language lang, const Formula& f);

// Guard test for first-order formulas without PolyExists/ExtDiamond:
// every quantifier block must be of the form
//   exists x1..xk. (alpha & psi)   /   forall x1..xk. (alpha -> psi)
// where alpha is an atom over one of guardNames covering the block's
// variables and all free variables of psi.
bool is_guarded(const Formula& f, const std::set<std::string>& guardNames);

}  // namespace genmodels
