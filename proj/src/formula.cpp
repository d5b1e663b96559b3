#include "genmodels/formula.hpp"

#include <algorithm>

#include "genmodels/errors.hpp"

namespace genmodels {

namespace {

Formula make(Kind k, std::string n, std::vector<std::string> a, std::vector<Formula> c) {
  return std::make_shared<const Node>(k, std::move(n), std::move(a), std::move(c));
}

}  // namespace

Formula prop(const std::string& name) { return make(Kind::PropLetter, name, {}, {}); }
Formula fixvar(const std::string& name) { return make(Kind::FixVar, name, {}, {}); }
Formula neg(Formula f) { return make(Kind::Not, "", {}, {std::move(f)}); }
Formula conj(Formula a, Formula b) { return make(Kind::And, "", {}, {std::move(a), std::move(b)}); }
Formula disj(Formula a, Formula b) { return make(Kind::Or, "", {}, {std::move(a), std::move(b)}); }
Formula impl(Formula a, Formula b) { return make(Kind::Implies, "", {}, {std::move(a), std::move(b)}); }
Formula diamond(Formula f) { return make(Kind::Diamond, "", {}, {std::move(f)}); }
Formula box(Formula f) { return make(Kind::Box, "", {}, {std::move(f)}); }
Formula mu(const std::string& var, Formula body) { return make(Kind::Mu, var, {}, {std::move(body)}); }
Formula nu(const std::string& var, Formula body) { return make(Kind::Nu, var, {}, {std::move(body)}); }
Formula pred(const std::string& name, const std::vector<std::string>& args) {
  return make(Kind::PredAtom, name, args, {});
}
Formula eq(const std::string& lhs, const std::string& rhs) {
  return make(Kind::Equal, "", {lhs, rhs}, {});
}
Formula exists(const std::string& var, Formula body) {
  return make(Kind::Exists, var, {}, {std::move(body)});
}
Formula forall(const std::string& var, Formula body) {
  return make(Kind::Forall, var, {}, {std::move(body)});
}
Formula poly_exists(const std::vector<std::string>& vars, Formula body) {
  return make(Kind::PolyExists, "", vars, {std::move(body)});
}
Formula ext_dia(Formula f) { return make(Kind::ExtDiamond, "", {}, {std::move(f)}); }
Formula set_atom(const std::string& setVar, const std::string& objVar) {
  return make(Kind::SetAtom, setVar, {objVar}, {});
}
Formula exists_set(const std::string& var, Formula body) {
  return make(Kind::ExistsSet, var, {}, {std::move(body)});
}
Formula forall_set(const std::string& var, Formula body) {
  return make(Kind::ForallSet, var, {}, {std::move(body)});
}
Formula e_atom(const std::string& objVar, const std::string& predVar) {
  return make(Kind::EAtom, "", {objVar, predVar}, {});
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name || a->args != b->args) return false;
  if (a->kids.size() != b->kids.size()) return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!structurally_equal(a->kids[i], b->kids[i])) return false;
  return true;
}

bool is_object_var(const std::string& name) {
  return !name.empty() && name[0] >= 'a' && name[0] <= 'z';
}
bool is_upper_var(const std::string& name) {
  return !name.empty() && name[0] >= 'A' && name[0] <= 'Z';
}
bool is_pred_sort_var(const std::string& name) { return !name.empty() && name[0] == 'P'; }

namespace {

void collect_free(const Formula& f, FreeVars& out, std::set<std::string>& boundObj,
                  std::set<std::string>& boundSet, std::set<std::string>& boundFix) {
  switch (f->kind) {
    case Kind::PropLetter:
      out.letters.insert(f->name);
      return;
    case Kind::FixVar:
      if (!boundFix.count(f->name)) out.fixpoints.insert(f->name);
      return;
    case Kind::PredAtom:
      for (const auto& v : f->args)
        if (!boundObj.count(v)) out.objects.insert(v);
      return;
    case Kind::Equal: {
      for (const auto& v : f->args) {
        if (is_pred_sort_var(v)) {
          if (!boundSet.count(v)) out.preds.insert(v);
        } else if (!boundObj.count(v)) {
          out.objects.insert(v);
        }
      }
      return;
    }
    case Kind::SetAtom:
      if (!boundSet.count(f->name)) out.sets.insert(f->name);
      if (!boundObj.count(f->args[0])) out.objects.insert(f->args[0]);
      return;
    case Kind::EAtom:
      if (!boundObj.count(f->args[0])) out.objects.insert(f->args[0]);
      if (!boundSet.count(f->args[1])) out.preds.insert(f->args[1]);
      return;
    case Kind::Not:
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Diamond:
    case Kind::Box:
    case Kind::ExtDiamond:
      for (const auto& k : f->kids) collect_free(k, out, boundObj, boundSet, boundFix);
      return;
    case Kind::Mu:
    case Kind::Nu: {
      bool fresh = boundFix.insert(f->name).second;
      collect_free(f->kids[0], out, boundObj, boundSet, boundFix);
      if (fresh) boundFix.erase(f->name);
      return;
    }
    case Kind::Exists:
    case Kind::Forall: {
      auto& pool = is_pred_sort_var(f->name) ? boundSet : boundObj;
      bool fresh = pool.insert(f->name).second;
      collect_free(f->kids[0], out, boundObj, boundSet, boundFix);
      if (fresh) pool.erase(f->name);
      return;
    }
    case Kind::ExistsSet:
    case Kind::ForallSet: {
      bool fresh = boundSet.insert(f->name).second;
      collect_free(f->kids[0], out, boundObj, boundSet, boundFix);
      if (fresh) boundSet.erase(f->name);
      return;
    }
    case Kind::PolyExists: {
      std::vector<std::string> added;
      for (const auto& v : f->args)
        if (boundObj.insert(v).second) added.push_back(v);
      collect_free(f->kids[0], out, boundObj, boundSet, boundFix);
      for (const auto& v : added) boundObj.erase(v);
      return;
    }
  }
}

}  // namespace

FreeVars free_variables(const Formula& f) {
  FreeVars out;
  std::set<std::string> bo, bs, bf;
  collect_free(f, out, bo, bs, bf);
  return out;
}

std::set<std::string> free_object_vars(const Formula& f) {
  return free_variables(f).objects;
}

namespace {

// parity: false = positive context. Returns false if some occurrence of var
// (as FixVar or SetAtom head, whichever matches) is under odd polarity.
bool positive_walk(const Formula& f, const std::string& var, bool flipped) {
  switch (f->kind) {
    case Kind::FixVar:
      if (f->name == var && flipped) return false;
      return true;
    case Kind::SetAtom:
      if (f->name == var && flipped) return false;
      return true;
    case Kind::Not:
      return positive_walk(f->kids[0], var, !flipped);
    case Kind::Implies:
      return positive_walk(f->kids[0], var, !flipped) && positive_walk(f->kids[1], var, flipped);
    case Kind::Mu:
    case Kind::Nu:
      if (f->name == var) return true;  // shadowed
      return positive_walk(f->kids[0], var, flipped);
    case Kind::ExistsSet:
    case Kind::ForallSet:
      if (f->name == var) return true;
      return positive_walk(f->kids[0], var, flipped);
    default:
      for (const auto& k : f->kids)
        if (!positive_walk(k, var, flipped)) return false;
      return true;
  }
}

}  // namespace

bool is_positive_in(const Formula& f, const std::string& var) {
  return positive_walk(f, var, false);
}

namespace {

[[noreturn]] void ill(const std::string& what) {
  throw SemanticError(SemanticError::Code::InvalidFormula, what);
}

void check_node(Language lang, const Formula& f) {
  switch (f->kind) {
    case Kind::Not:
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      break;
    case Kind::PropLetter:
      if (lang != Language::Modal) ill("proposition letters belong to the modal language");
      if (!is_object_var(f->name)) ill("proposition letter must be lowercase: " + f->name);
      break;
    case Kind::FixVar:
      if (lang != Language::Modal) ill("fixpoint variables belong to the modal language");
      if (!is_upper_var(f->name)) ill("fixpoint variable must be uppercase: " + f->name);
      break;
    case Kind::Diamond:
    case Kind::Box:
      if (lang != Language::Modal) ill("modalities belong to the modal language");
      break;
    case Kind::Mu:
    case Kind::Nu:
      if (lang != Language::Modal) ill("fixpoint binders belong to the modal language");
      if (!is_upper_var(f->name)) ill("fixpoint variable must be uppercase: " + f->name);
      if (!is_positive_in(f->kids[0], f->name))
        ill("fixpoint variable " + f->name + " must occur positively in its body");
      break;
    case Kind::PredAtom:
      if (lang == Language::Modal) ill("predicate atoms are not modal formulas");
      if (f->name.empty()) ill("empty predicate name");
      if (f->args.empty()) ill("predicate atom needs at least one argument");
      for (const auto& v : f->args)
        if (!is_object_var(v)) ill("predicate argument must be an object variable: " + v);
      if (lang == Language::Mso && f->args.size() == 1 && is_upper_var(f->name))
        ill("unary uppercase application is a set atom, not a predicate: " + f->name);
      if (lang == Language::TwoSorted && (f->name == "E" || is_pred_sort_var(f->name)))
        ill("predicate name reserved in the two-sorted language: " + f->name);
      break;
    case Kind::Equal:
      if (lang == Language::Modal) ill("equality is not a modal formula");
      if (lang == Language::TwoSorted) {
        bool lp = is_pred_sort_var(f->args[0]), rp = is_pred_sort_var(f->args[1]);
        if (lp != rp) ill("equality across sorts: " + f->args[0] + " = " + f->args[1]);
        if (!lp && (!is_object_var(f->args[0]) || !is_object_var(f->args[1])))
          ill("equality needs variables of a common sort");
      } else {
        if (!is_object_var(f->args[0]) || !is_object_var(f->args[1]))
          ill("equality is between object variables");
      }
      break;
    case Kind::Exists:
    case Kind::Forall:
      if (lang == Language::Modal) ill("quantifiers are not modal formulas");
      if (is_pred_sort_var(f->name)) {
        if (lang != Language::TwoSorted)
          ill("predicate-sort quantifier outside the two-sorted language: " + f->name);
      } else if (!is_object_var(f->name)) {
        ill("quantified variable must be an object variable: " + f->name);
      }
      break;
    case Kind::PolyExists:
      if (lang != Language::Fol) ill("simultaneous re-assignment belongs to the first-order language");
      if (f->args.empty()) ill("simultaneous quantifier needs at least one variable");
      for (size_t i = 0; i < f->args.size(); ++i) {
        if (!is_object_var(f->args[i])) ill("quantified variable must be an object variable: " + f->args[i]);
        for (size_t j = i + 1; j < f->args.size(); ++j)
          if (f->args[i] == f->args[j]) ill("duplicate variable in simultaneous quantifier: " + f->args[i]);
      }
      break;
    case Kind::ExtDiamond:
      if (lang != Language::Fol) ill("the extension modality belongs to the first-order language");
      break;
    case Kind::SetAtom:
      if (lang != Language::Mso) ill("set atoms belong to the monadic second-order language");
      if (!is_upper_var(f->name)) ill("set variable must be uppercase: " + f->name);
      if (!is_object_var(f->args[0])) ill("set atom argument must be an object variable: " + f->args[0]);
      break;
    case Kind::ExistsSet:
    case Kind::ForallSet:
      if (lang != Language::Mso) ill("set quantifiers belong to the monadic second-order language");
      if (!is_upper_var(f->name)) ill("set variable must be uppercase: " + f->name);
      break;
    case Kind::EAtom:
      if (lang != Language::TwoSorted) ill("membership atoms belong to the two-sorted language");
      if (!is_object_var(f->args[0])) ill("membership atom needs an object variable first: " + f->args[0]);
      if (!is_pred_sort_var(f->args[1]))
        ill("membership atom needs a predicate variable second: " + f->args[1]);
      break;
  }
  for (const auto& k : f->kids) check_node(lang, k);
}

}  // namespace

void check_wellformed(Language lang, const Formula& f) {
  if (!f) ill("null formula");
  check_node(lang, f);
}

namespace {

bool guarded_walk(const Formula& f, const std::set<std::string>& guardNames);

// Collects a maximal same-kind quantifier block, then demands a guard atom
// covering the block variables and the free variables of the remainder.
bool guarded_block(const Formula& f, Kind qk, const std::set<std::string>& guardNames) {
  std::set<std::string> blockVars;
  Formula body = f;
  while (body->kind == qk) {
    blockVars.insert(body->name);
    body = body->kids[0];
  }
  Kind want = (qk == Kind::Exists) ? Kind::And : Kind::Implies;
  if (body->kind != want) return false;
  const Formula& alpha = body->kids[0];
  const Formula& psi = body->kids[1];
  if (alpha->kind != Kind::PredAtom || !guardNames.count(alpha->name)) return false;
  std::set<std::string> guardVars(alpha->args.begin(), alpha->args.end());
  for (const auto& v : blockVars)
    if (!guardVars.count(v)) return false;
  for (const auto& v : free_object_vars(psi))
    if (!guardVars.count(v)) return false;
  return guarded_walk(psi, guardNames);
}

bool guarded_walk(const Formula& f, const std::set<std::string>& guardNames) {
  switch (f->kind) {
    case Kind::PredAtom:
    case Kind::Equal:
      return true;
    case Kind::Not:
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      for (const auto& k : f->kids)
        if (!guarded_walk(k, guardNames)) return false;
      return true;
    }
    case Kind::Exists:
      return guarded_block(f, Kind::Exists, guardNames);
    case Kind::Forall:
      return guarded_block(f, Kind::Forall, guardNames);
    default:
      throw SemanticError(SemanticError::Code::InvalidFormula,
                          "guard test expects a plain first-order formula");
  }
}

}  // namespace

bool is_guarded(const Formula& f, const std::set<std::string>& guardNames) {
  return guarded_walk(f, guardNames);
}

}  // namespace genmodels
