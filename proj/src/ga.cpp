#include "genmodels/ga.hpp"

#include <algorithm>
#include <functional>

#include "genmodels/errors.hpp"

namespace genmodels {

int GAModel::domain_index(const std::string& d) const {
  for (size_t i = 0; i < domain.size(); ++i)
    if (domain[i] == d) return static_cast<int>(i);
  return -1;
}

int GAModel::var_index(const std::string& v) const {
  for (size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == v) return static_cast<int>(i);
  throw SemanticError(SemanticError::Code::VariableOutsideUniverse,
                      "variable " + v + " is not in the declared universe");
}

void GAModel::check_invariants() const {
  if (domain.empty())
    throw SemanticError(SemanticError::Code::InvalidModel, "empty domain");
  if (assignments.empty())
    throw SemanticError(SemanticError::Code::InvalidModel, "assignment set is empty");
  for (const auto& t : assignments) {
    if (t.size() != variables.size())
      throw SemanticError(SemanticError::Code::InvalidModel, "assignment tuple length mismatch");
    for (int d : t)
      if (d < 0 || d >= static_cast<int>(domain.size()))
        throw SemanticError(SemanticError::Code::InvalidModel, "assignment value out of domain");
  }
  for (const auto& [name, p] : predicates)
    for (const auto& t : p.tuples) {
      if (static_cast<int>(t.size()) != p.arity)
        throw SemanticError(SemanticError::Code::InvalidModel,
                            "tuple arity mismatch for predicate " + name);
      for (int d : t)
        if (d < 0 || d >= static_cast<int>(domain.size()))
          throw SemanticError(SemanticError::Code::InvalidModel,
                              "tuple value out of domain for predicate " + name);
    }
}

size_t GAModel::tuple_space_size() const {
  size_t n = 1;
  for (size_t i = 0; i < variables.size(); ++i) n *= domain.size();
  return n;
}

namespace {

const PredInterp& lookup_pred(const GAModel& m, const std::string& name) {
  auto it = m.predicates.find(name);
  if (it == m.predicates.end())
    throw SemanticError(SemanticError::Code::UnknownPredicate, "unknown predicate " + name);
  return it->second;
}

bool atom_holds(const GAModel& m, const Formula& f, const std::vector<int>& s) {
  if (f->kind == Kind::Equal) return s[m.var_index(f->args[0])] == s[m.var_index(f->args[1])];
  const PredInterp& p = lookup_pred(m, f->name);
  if (p.arity != static_cast<int>(f->args.size()))
    throw SemanticError(SemanticError::Code::UnknownPredicate,
                        "arity mismatch for predicate " + f->name);
  std::vector<int> tuple(f->args.size());
  for (size_t i = 0; i < f->args.size(); ++i) tuple[i] = s[m.var_index(f->args[i])];
  return p.holds(tuple);
}

// Enumeration order of the full tuple space, used by the superset search.
std::vector<std::vector<int>> all_tuples(const GAModel& m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m.variables.size(), 0);
  size_t total = m.tuple_space_size();
  out.reserve(total);
  for (size_t i = 0; i < total; ++i) {
    out.push_back(cur);
    for (size_t k = cur.size(); k-- > 0;) {
      if (++cur[k] < static_cast<int>(m.domain.size())) break;
      cur[k] = 0;
    }
  }
  return out;
}

bool eval_ga_rec(const GAModel& m, const std::set<std::vector<int>>& v, const Formula& f,
                 const std::vector<int>& s, const ExtDiamondConfig& cfg) {
  switch (f->kind) {
    case Kind::PredAtom:
    case Kind::Equal:
      return atom_holds(m, f, s);
    case Kind::Not:
      return !eval_ga_rec(m, v, f->kids[0], s, cfg);
    case Kind::And:
      return eval_ga_rec(m, v, f->kids[0], s, cfg) && eval_ga_rec(m, v, f->kids[1], s, cfg);
    case Kind::Or:
      return eval_ga_rec(m, v, f->kids[0], s, cfg) || eval_ga_rec(m, v, f->kids[1], s, cfg);
    case Kind::Implies:
      return !eval_ga_rec(m, v, f->kids[0], s, cfg) || eval_ga_rec(m, v, f->kids[1], s, cfg);
    case Kind::Exists: {
      int xi = m.var_index(f->name);
      std::vector<int> t = s;
      for (int d = 0; d < static_cast<int>(m.domain.size()); ++d) {
        t[xi] = d;
        if (v.count(t) && eval_ga_rec(m, v, f->kids[0], t, cfg)) return true;
      }
      return false;
    }
    case Kind::Forall: {
      int xi = m.var_index(f->name);
      std::vector<int> t = s;
      for (int d = 0; d < static_cast<int>(m.domain.size()); ++d) {
        t[xi] = d;
        if (v.count(t) && !eval_ga_rec(m, v, f->kids[0], t, cfg)) return false;
      }
      return true;
    }
    case Kind::PolyExists: {
      std::vector<int> idx;
      idx.reserve(f->args.size());
      for (const auto& var : f->args) idx.push_back(m.var_index(var));
      for (const auto& t : v) {
        bool agreesOff = true;
        for (size_t k = 0; k < t.size() && agreesOff; ++k) {
          if (std::find(idx.begin(), idx.end(), static_cast<int>(k)) != idx.end()) continue;
          agreesOff = t[k] == s[k];
        }
        if (agreesOff && eval_ga_rec(m, v, f->kids[0], t, cfg)) return true;
      }
      return false;
    }
    case Kind::ExtDiamond: {
      size_t space = m.tuple_space_size();
      if (space > cfg.maxTupleSpace)
        throw SemanticError(SemanticError::Code::CapExceeded,
                            "tuple space " + std::to_string(space) +
                                " exceeds the extension-search cap " +
                                std::to_string(cfg.maxTupleSpace));
      std::vector<std::vector<int>> missing;
      for (const auto& t : all_tuples(m))
        if (!v.count(t)) missing.push_back(t);
      if (static_cast<int>(missing.size()) > cfg.maxMissingTuples)
        throw SemanticError(SemanticError::Code::CapExceeded,
                            "extension search over 2^" + std::to_string(missing.size()) +
                                " supersets exceeds the cap");
      for (uint64_t pick = 0; pick < (uint64_t{1} << missing.size()); ++pick) {
        std::set<std::vector<int>> bigger = v;
        for (size_t i = 0; i < missing.size(); ++i)
          if ((pick >> i) & 1) bigger.insert(missing[i]);
        if (eval_ga_rec(m, bigger, f->kids[0], s, cfg)) return true;
      }
      return false;
    }
    default:
      throw SemanticError(SemanticError::Code::InvalidFormula,
                          "not a first-order formula node");
  }
}

}  // namespace

bool eval_ga(const GAModel& model, const Formula& f, const std::vector<int>& s,
             const ExtDiamondConfig& cfg) {
  if (!model.assignments.count(s))
    throw SemanticError(SemanticError::Code::AssignmentNotAdmissible,
                        "the given assignment is not admissible");
  return eval_ga_rec(model, model.assignments, f, s, cfg);
}

bool eval_extension_modality(const GAModel& model, const Formula& f, const std::vector<int>& s,
                             const ExtDiamondConfig& cfg) {
  return eval_ga(model, f, s, cfg);
}

namespace {

bool eval_std_rec(const GAModel& m, const Formula& f, const std::vector<int>& s) {
  switch (f->kind) {
    case Kind::PredAtom:
    case Kind::Equal:
      return atom_holds(m, f, s);
    case Kind::Not:
      return !eval_std_rec(m, f->kids[0], s);
    case Kind::And:
      return eval_std_rec(m, f->kids[0], s) && eval_std_rec(m, f->kids[1], s);
    case Kind::Or:
      return eval_std_rec(m, f->kids[0], s) || eval_std_rec(m, f->kids[1], s);
    case Kind::Implies:
      return !eval_std_rec(m, f->kids[0], s) || eval_std_rec(m, f->kids[1], s);
    case Kind::Exists:
    case Kind::Forall: {
      int xi = m.var_index(f->name);
      bool ex = f->kind == Kind::Exists;
      std::vector<int> t = s;
      for (int d = 0; d < static_cast<int>(m.domain.size()); ++d) {
        t[xi] = d;
        if (eval_std_rec(m, f->kids[0], t) == ex) return ex;
      }
      return !ex;
    }
    case Kind::PolyExists: {
      std::vector<int> idx;
      for (const auto& var : f->args) idx.push_back(m.var_index(var));
      std::vector<int> t = s;
      size_t combos = 1;
      for (size_t i = 0; i < idx.size(); ++i) combos *= m.domain.size();
      for (size_t c = 0; c < combos; ++c) {
        size_t rest = c;
        for (int xi : idx) {
          t[xi] = static_cast<int>(rest % m.domain.size());
          rest /= m.domain.size();
        }
        if (eval_std_rec(m, f->kids[0], t)) return true;
      }
      return false;
    }
    case Kind::ExtDiamond:
      // the only superset of the full space is itself
      return eval_std_rec(m, f->kids[0], s);
    default:
      throw SemanticError(SemanticError::Code::InvalidFormula,
                          "not a first-order formula node");
  }
}

}  // namespace

bool eval_standard_fol(const GAModel& model, const Formula& f, const std::vector<int>& s) {
  if (s.size() != model.variables.size())
    throw SemanticError(SemanticError::Code::InvalidModel, "assignment tuple length mismatch");
  return eval_std_rec(model, f, s);
}

int AbstractAssignmentFrame::state_index(const std::string& s) const {
  for (size_t i = 0; i < states.size(); ++i)
    if (states[i] == s) return static_cast<int>(i);
  return -1;
}

const std::vector<uint64_t>& AbstractAssignmentFrame::relation(const std::string& var) const {
  auto it = transitions.find(var);
  if (it == transitions.end())
    throw SemanticError(SemanticError::Code::UnknownVariable,
                        "no transition relation for variable " + var);
  return it->second;
}

ConfluenceResult check_confluence(const AbstractAssignmentFrame& frame, const std::string& x,
                                  const std::string& y) {
  const auto& rx = frame.relation(x);
  const auto& ry = frame.relation(y);
  int n = static_cast<int>(frame.states.size());
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (!((rx[s] >> t) & 1)) continue;
      for (int u = 0; u < n; ++u) {
        if (!((ry[s] >> u) & 1)) continue;
        if ((ry[t] & rx[u]) == 0) return {false, s, t, u};
      }
    }
  return {};
}

AbstractAssignmentFrame assignment_space_frame(const GAModel& model) {
  model.check_invariants();
  AbstractAssignmentFrame out;
  std::vector<std::vector<int>> states(model.assignments.begin(), model.assignments.end());
  if (states.size() > 64)
    throw SemanticError(SemanticError::Code::CapExceeded,
                        "assignment-space frame supports at most 64 admissible assignments");
  for (const auto& t : states) {
    std::string name;
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) name += ',';
      name += model.domain[t[i]];
    }
    out.states.push_back('(' + name + ')');
  }
  for (size_t vi = 0; vi < model.variables.size(); ++vi) {
    std::vector<uint64_t> rel(states.size(), 0);
    for (size_t a = 0; a < states.size(); ++a)
      for (size_t b = 0; b < states.size(); ++b) {
        bool variant = true;
        for (size_t k = 0; k < states[a].size() && variant; ++k)
          if (k != vi) variant = states[a][k] == states[b][k];
        if (variant) rel[a] |= uint64_t{1} << b;
      }
    out.transitions[model.variables[vi]] = std::move(rel);
  }
  return out;
}

namespace {

// Validity of "exists x. forall y. S -> forall y. exists x. S" at every state
// under valuation `val` of the atom S.
bool axiom_valid(const std::vector<uint64_t>& rx, const std::vector<uint64_t>& ry, int n,
                 uint64_t val) {
  for (int s = 0; s < n; ++s) {
    bool lhs = false;
    for (int t = 0; t < n && !lhs; ++t)
      if (((rx[s] >> t) & 1) && (ry[t] & ~val) == 0) lhs = true;
    if (!lhs) continue;
    for (int u = 0; u < n; ++u) {
      if (!((ry[s] >> u) & 1)) continue;
      if ((rx[u] & val) == 0) return false;
    }
  }
  return true;
}

}  // namespace

bool confluence_axiom_valid(const AbstractAssignmentFrame& frame, const std::string& x,
                            const std::string& y) {
  const std::vector<uint64_t>& rx = frame.relation(x);
  const std::vector<uint64_t>& ry = frame.relation(y);
  int n = static_cast<int>(frame.states.size());
  if (n > 20)
    throw SemanticError(SemanticError::Code::CapExceeded,
                        "axiom validity enumerates 2^|states| valuations; 20 states max");
  for (uint64_t val = 0; val < (uint64_t{1} << n); ++val)
    if (!axiom_valid(rx, ry, n, val)) return false;
  return true;
}

CorrespondenceReport correspondence_experiment(int maxStates) {
  if (maxStates < 1 || maxStates > 3)
    throw SemanticError(SemanticError::Code::CapExceeded,
                        "the exhaustive regime covers 1 to 3 states");
  CorrespondenceReport report;
  for (int n = 1; n <= maxStates; ++n) {
    uint64_t relCount = uint64_t{1} << (n * n);
    for (uint64_t xm = 0; xm < relCount; ++xm)
      for (uint64_t ym = 0; ym < relCount; ++ym) {
        std::vector<uint64_t> rx(n), ry(n);
        for (int i = 0; i < n; ++i) {
          rx[i] = (xm >> (i * n)) & ((uint64_t{1} << n) - 1);
          ry[i] = (ym >> (i * n)) & ((uint64_t{1} << n) - 1);
        }
        bool valid = true;
        for (uint64_t val = 0; val < (uint64_t{1} << n) && valid; ++val)
          valid = axiom_valid(rx, ry, n, val);
        AbstractAssignmentFrame frame;
        for (int i = 0; i < n; ++i) frame.states.push_back("s" + std::to_string(i));
        frame.transitions["x"] = rx;
        frame.transitions["y"] = ry;
        bool confluent = check_confluence(frame, "x", "y").confluent;
        ++report.framesChecked;
        if (valid != confluent)
          report.mismatches.push_back("n=" + std::to_string(n) + " x=" + std::to_string(xm) +
                                      " y=" + std::to_string(ym));
      }
  }
  return report;
}

namespace {

Formula guard_atom(const std::string& guard, const std::vector<std::string>& universe) {
  return pred(guard, universe);
}

Formula translate_rec(const Formula& f, const std::string& guard,
                      const std::vector<std::string>& universe) {
  switch (f->kind) {
    case Kind::PredAtom:
    case Kind::Equal:
      return f;
    case Kind::Not:
      return neg(translate_rec(f->kids[0], guard, universe));
    case Kind::And:
      return conj(translate_rec(f->kids[0], guard, universe),
                  translate_rec(f->kids[1], guard, universe));
    case Kind::Or:
      return disj(translate_rec(f->kids[0], guard, universe),
                  translate_rec(f->kids[1], guard, universe));
    case Kind::Implies:
      return impl(translate_rec(f->kids[0], guard, universe),
                  translate_rec(f->kids[1], guard, universe));
    case Kind::Exists:
      return exists(f->name, conj(guard_atom(guard, universe),
                                  translate_rec(f->kids[0], guard, universe)));
    case Kind::Forall:
      return forall(f->name, impl(guard_atom(guard, universe),
                                  translate_rec(f->kids[0], guard, universe)));
    case Kind::PolyExists: {
      Formula body =
          conj(guard_atom(guard, universe), translate_rec(f->kids[0], guard, universe));
      for (size_t i = f->args.size(); i-- > 0;) body = exists(f->args[i], std::move(body));
      return body;
    }
    default:
      throw SemanticError(SemanticError::Code::InvalidFormula,
                          "the guarded translation takes extension-free first-order formulas");
  }
}

void collect_pred_names(const Formula& f, std::set<std::string>& out) {
  if (f->kind == Kind::PredAtom) out.insert(f->name);
  for (const auto& k : f->kids) collect_pred_names(k, out);
}

}  // namespace

GuardedTranslation translate_guarded(const Formula& f,
                                     const std::vector<std::string>& varUniverse) {
  std::set<std::string> universe(varUniverse.begin(), varUniverse.end());
  FreeVars fv = free_variables(f);
  for (const auto& v : fv.objects)
    if (!universe.count(v))
      throw SemanticError(SemanticError::Code::VariableOutsideUniverse,
                          "variable " + v + " is not in the declared universe");
  // bound variables must come from the universe too
  std::set<std::string> preds;
  collect_pred_names(f, preds);
  std::function<void(const Formula&)> checkBound = [&](const Formula& g) {
    if (g->kind == Kind::Exists || g->kind == Kind::Forall) {
      if (!universe.count(g->name))
        throw SemanticError(SemanticError::Code::VariableOutsideUniverse,
                            "variable " + g->name + " is not in the declared universe");
    }
    if (g->kind == Kind::PolyExists)
      for (const auto& v : g->args)
        if (!universe.count(v))
          throw SemanticError(SemanticError::Code::VariableOutsideUniverse,
                              "variable " + v + " is not in the declared universe");
    for (const auto& k : g->kids) checkBound(k);
  };
  checkBound(f);
  std::string guard = "G";
  for (int i = 1; preds.count(guard); ++i) guard = "G" + std::to_string(i);
  return {translate_rec(f, guard, varUniverse), guard};
}

}  // namespace genmodels
