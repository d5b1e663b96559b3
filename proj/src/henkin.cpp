#include "genmodels/henkin.hpp"

#include <algorithm>
#include <sstream>

#include "genmodels/errors.hpp"
#include "genmodels/render.hpp"

namespace genmodels {

int HenkinModel::domain_index(const std::string& d) const {
  for (size_t i = 0; i < domain.size(); ++i)
    if (domain[i] == d) return static_cast<int>(i);
  return -1;
}

void HenkinModel::check_invariants() const {
  if (domain.empty()) throw SemanticError(SemanticError::Code::InvalidModel, "empty domain");
  if (domain.size() > 20)
    throw SemanticError(SemanticError::Code::CapExceeded,
                        "set-quantifier domains support at most 20 elements");
  if (family.empty())
    throw SemanticError(SemanticError::Code::InvalidModel, "the family of sets is empty");
  uint64_t universe = (uint64_t{1} << domain.size()) - 1;
  for (uint64_t s : family)
    if (s & ~universe)
      throw SemanticError(SemanticError::Code::InvalidModel,
                          "family member mentions unknown elements");
  if (!std::is_sorted(family.begin(), family.end()) ||
      std::adjacent_find(family.begin(), family.end()) != family.end())
    throw SemanticError(SemanticError::Code::InvalidModel, "family must be sorted and unique");
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

bool HenkinModel::in_family(uint64_t mask) const {
  return std::binary_search(family.begin(), family.end(), mask);
}

std::string HenkinModel::set_to_string(uint64_t mask) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (size_t i = 0; i < domain.size(); ++i) {
    if (!((mask >> i) & 1)) continue;
    if (!first) os << ',';
    first = false;
    os << domain[i];
  }
  os << '}';
  return os.str();
}

std::vector<uint64_t> HenkinModel::powerset_family(size_t domainSize) {
  if (domainSize > 20)
    throw SemanticError(SemanticError::Code::CapExceeded,
                        "refusing to materialize a powerset family over " +
                            std::to_string(domainSize) + " elements");
  std::vector<uint64_t> out(size_t{1} << domainSize);
  for (size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

namespace {

int obj_value(const std::map<std::string, int>& objAssign, const std::string& var) {
  auto it = objAssign.find(var);
  if (it == objAssign.end())
    throw SemanticError(SemanticError::Code::UnknownVariable,
                        "object variable " + var + " is not assigned");
  return it->second;
}

uint64_t set_value(const std::map<std::string, uint64_t>& setAssign, const std::string& var) {
  auto it = setAssign.find(var);
  if (it == setAssign.end())
    throw SemanticError(SemanticError::Code::UnknownVariable,
                        "set variable " + var + " is not assigned");
  return it->second;
}

bool mso_atom(const HenkinModel& m, const Formula& f, const std::map<std::string, int>& oa) {
  auto it = m.predicates.find(f->name);
  if (it == m.predicates.end())
    throw SemanticError(SemanticError::Code::UnknownPredicate, "unknown predicate " + f->name);
  if (it->second.arity != static_cast<int>(f->args.size()))
    throw SemanticError(SemanticError::Code::UnknownPredicate,
                        "arity mismatch for predicate " + f->name);
  std::vector<int> tuple;
  tuple.reserve(f->args.size());
  for (const auto& a : f->args) tuple.push_back(obj_value(oa, a));
  return it->second.holds(tuple);
}

// One evaluator for both regimes; `setRange` is the family or the powerset.
bool eval_mso_rec(const HenkinModel& m, const std::vector<uint64_t>& setRange, const Formula& f,
                  std::map<std::string, int>& oa, std::map<std::string, uint64_t>& sa) {
  switch (f->kind) {
    case Kind::PredAtom:
      return mso_atom(m, f, oa);
    case Kind::Equal:
      return obj_value(oa, f->args[0]) == obj_value(oa, f->args[1]);
    case Kind::SetAtom:
      return (set_value(sa, f->name) >> obj_value(oa, f->args[0])) & 1;
    case Kind::Not:
      return !eval_mso_rec(m, setRange, f->kids[0], oa, sa);
    case Kind::And:
      return eval_mso_rec(m, setRange, f->kids[0], oa, sa) &&
             eval_mso_rec(m, setRange, f->kids[1], oa, sa);
    case Kind::Or:
      return eval_mso_rec(m, setRange, f->kids[0], oa, sa) ||
             eval_mso_rec(m, setRange, f->kids[1], oa, sa);
    case Kind::Implies:
      return !eval_mso_rec(m, setRange, f->kids[0], oa, sa) ||
             eval_mso_rec(m, setRange, f->kids[1], oa, sa);
    case Kind::Exists:
    case Kind::Forall: {
      bool ex = f->kind == Kind::Exists;
      auto saved = oa.find(f->name);
      int old = saved != oa.end() ? saved->second : -1;
      bool had = saved != oa.end();
      for (int d = 0; d < static_cast<int>(m.domain.size()); ++d) {
        oa[f->name] = d;
        bool r = eval_mso_rec(m, setRange, f->kids[0], oa, sa);
        if (r == ex) {
          if (had)
            oa[f->name] = old;
          else
            oa.erase(f->name);
          return ex;
        }
      }
      if (had)
        oa[f->name] = old;
      else
        oa.erase(f->name);
      return !ex;
    }
    case Kind::ExistsSet:
    case Kind::ForallSet: {
      bool ex = f->kind == Kind::ExistsSet;
      auto saved = sa.find(f->name);
      uint64_t old = saved != sa.end() ? saved->second : 0;
      bool had = saved != sa.end();
      for (uint64_t s : setRange) {
        sa[f->name] = s;
        bool r = eval_mso_rec(m, setRange, f->kids[0], oa, sa);
        if (r == ex) {
          if (had)
            sa[f->name] = old;
          else
            sa.erase(f->name);
          return ex;
        }
      }
      if (had)
        sa[f->name] = old;
      else
        sa.erase(f->name);
      return !ex;
    }
    default:
      throw SemanticError(SemanticError::Code::InvalidFormula,
                          "not a monadic second-order formula node");
  }
}

}  // namespace

bool eval_mso(const HenkinModel& model, const Formula& f,
              const std::map<std::string, int>& objAssign,
              const std::map<std::string, uint64_t>& setAssign) {
  for (const auto& [var, value] : setAssign)
    if (!model.in_family(value))
      throw SemanticError(SemanticError::Code::SetValueNotInFamily,
                          "value of set variable " + var + " is not in the family: " +
                              model.set_to_string(value));
  std::map<std::string, int> oa = objAssign;
  std::map<std::string, uint64_t> sa = setAssign;
  return eval_mso_rec(model, model.family, f, oa, sa);
}

bool eval_mso_standard(const HenkinModel& model, const Formula& f,
                       const std::map<std::string, int>& objAssign,
                       const std::map<std::string, uint64_t>& setAssign) {
  std::map<std::string, int> oa = objAssign;
  std::map<std::string, uint64_t> sa = setAssign;
  std::vector<uint64_t> powerset = HenkinModel::powerset_family(model.domain.size());
  return eval_mso_rec(model, powerset, f, oa, sa);
}

namespace {

struct TauState {
  std::map<std::string, std::string> names;  // MSO set var -> pred var
  std::vector<std::pair<std::string, std::string>> order;
  int next = 0;

  const std::string& name_for(const std::string& setVar) {
    auto it = names.find(setVar);
    if (it != names.end()) return it->second;
    std::string fresh = next == 0 ? "P" : "P" + std::to_string(next);
    ++next;
    names[setVar] = fresh;
    order.emplace_back(setVar, fresh);
    return names[setVar];
  }
};

Formula tau_rec(const Formula& f, TauState& st) {
  switch (f->kind) {
    case Kind::PredAtom:
    case Kind::Equal:
      return f;
    case Kind::SetAtom:
      return e_atom(f->args[0], st.name_for(f->name));
    case Kind::ExistsSet:
      return exists(st.name_for(f->name), tau_rec(f->kids[0], st));
    case Kind::ForallSet:
      return forall(st.name_for(f->name), tau_rec(f->kids[0], st));
    case Kind::Exists:
      return exists(f->name, tau_rec(f->kids[0], st));
    case Kind::Forall:
      return forall(f->name, tau_rec(f->kids[0], st));
    case Kind::Not:
      return neg(tau_rec(f->kids[0], st));
    case Kind::And:
      return conj(tau_rec(f->kids[0], st), tau_rec(f->kids[1], st));
    case Kind::Or:
      return disj(tau_rec(f->kids[0], st), tau_rec(f->kids[1], st));
    case Kind::Implies:
      return impl(tau_rec(f->kids[0], st), tau_rec(f->kids[1], st));
    default:
      throw SemanticError(SemanticError::Code::InvalidFormula,
                          "not a monadic second-order formula node");
  }
}

}  // namespace

TauResult tau_translate(const Formula& f) {
  check_wellformed(Language::Mso, f);
  TauState st;
  Formula out = tau_rec(f, st);
  check_wellformed(Language::TwoSorted, out);
  return {out, st.order};
}

int TwoSortedStructure::object_index(const std::string& o) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == o) return static_cast<int>(i);
  return -1;
}

int TwoSortedStructure::pred_point_index(const std::string& p) const {
  for (size_t i = 0; i < predPoints.size(); ++i)
    if (predPoints[i] == p) return static_cast<int>(i);
  return -1;
}

void TwoSortedStructure::check_invariants() const {
  if (objects.empty())
    throw SemanticError(SemanticError::Code::InvalidModel, "no objects");
  if (objects.size() > 62)
    throw SemanticError(SemanticError::Code::CapExceeded, "at most 62 objects supported");
  for (const auto& [o, p] : e)
    if (o < 0 || o >= static_cast<int>(objects.size()) || p < 0 ||
        p >= static_cast<int>(predPoints.size()))
      throw SemanticError(SemanticError::Code::InvalidModel, "membership pair out of range");
  for (const auto& [name, pr] : predicates)
    for (const auto& t : pr.tuples) {
      if (static_cast<int>(t.size()) != pr.arity)
        throw SemanticError(SemanticError::Code::InvalidModel,
                            "tuple arity mismatch for predicate " + name);
      for (int d : t)
        if (d < 0 || d >= static_cast<int>(objects.size()))
          throw SemanticError(SemanticError::Code::InvalidModel,
                              "tuple value out of range for predicate " + name);
    }
}

uint64_t TwoSortedStructure::extension_of(int point) const {
  uint64_t mask = 0;
  for (const auto& [o, p] : e)
    if (p == point) mask |= uint64_t{1} << o;
  return mask;
}

TwoSortedStructure to_two_sorted(const HenkinModel& model) {
  model.check_invariants();
  TwoSortedStructure st;
  st.objects = model.domain;
  st.predicates = model.predicates;
  for (size_t i = 0; i < model.family.size(); ++i) {
    st.predPoints.push_back(model.set_to_string(model.family[i]));
    for (size_t d = 0; d < model.domain.size(); ++d)
      if ((model.family[i] >> d) & 1)
        st.e.insert({static_cast<int>(d), static_cast<int>(i)});
  }
  return st;
}

namespace {

bool two_sorted_rec(const TwoSortedStructure& st, const Formula& f,
                    std::map<std::string, int>& oa, std::map<std::string, int>& pa) {
  switch (f->kind) {
    case Kind::PredAtom: {
      auto it = st.predicates.find(f->name);
      if (it == st.predicates.end())
        throw SemanticError(SemanticError::Code::UnknownPredicate,
                            "unknown predicate " + f->name);
      std::vector<int> tuple;
      tuple.reserve(f->args.size());
      for (const auto& a : f->args) tuple.push_back(obj_value(oa, a));
      if (it->second.arity != static_cast<int>(tuple.size()))
        throw SemanticError(SemanticError::Code::UnknownPredicate,
                            "arity mismatch for predicate " + f->name);
      return it->second.holds(tuple);
    }
    case Kind::EAtom:
      return st.e.count({obj_value(oa, f->args[0]), obj_value(pa, f->args[1])}) != 0;
    case Kind::Equal: {
      bool predSort = is_pred_sort_var(f->args[0]);
      auto& env = predSort ? pa : oa;
      return obj_value(env, f->args[0]) == obj_value(env, f->args[1]);
    }
    case Kind::Not:
      return !two_sorted_rec(st, f->kids[0], oa, pa);
    case Kind::And:
      return two_sorted_rec(st, f->kids[0], oa, pa) && two_sorted_rec(st, f->kids[1], oa, pa);
    case Kind::Or:
      return two_sorted_rec(st, f->kids[0], oa, pa) || two_sorted_rec(st, f->kids[1], oa, pa);
    case Kind::Implies:
      return !two_sorted_rec(st, f->kids[0], oa, pa) || two_sorted_rec(st, f->kids[1], oa, pa);
    case Kind::Exists:
    case Kind::Forall: {
      bool ex = f->kind == Kind::Exists;
      bool predSort = is_pred_sort_var(f->name);
      auto& env = predSort ? pa : oa;
      size_t count = predSort ? st.predPoints.size() : st.objects.size();
      auto saved = env.find(f->name);
      int old = saved != env.end() ? saved->second : -1;
      bool had = saved != env.end();
      for (size_t d = 0; d < count; ++d) {
        env[f->name] = static_cast<int>(d);
        bool r = two_sorted_rec(st, f->kids[0], oa, pa);
        if (r == ex) {
          if (had)
            env[f->name] = old;
          else
            env.erase(f->name);
          return ex;
        }
      }
      if (had)
        env[f->name] = old;
      else
        env.erase(f->name);
      return !ex;
    }
    default:
      throw SemanticError(SemanticError::Code::InvalidFormula,
                          "not a two-sorted formula node");
  }
}

}  // namespace

bool eval_two_sorted(const TwoSortedStructure& st, const Formula& f,
                     const std::map<std::string, int>& objAssign,
                     const std::map<std::string, int>& predAssign) {
  std::map<std::string, int> oa = objAssign;
  std::map<std::string, int> pa = predAssign;
  return two_sorted_rec(st, f, oa, pa);
}

WitnessCheck check_ext(const TwoSortedStructure& st) {
  for (size_t p = 0; p < st.predPoints.size(); ++p)
    for (size_t q = p + 1; q < st.predPoints.size(); ++q)
      if (st.extension_of(static_cast<int>(p)) == st.extension_of(static_cast<int>(q)))
        return {false, {static_cast<int>(p), static_cast<int>(q)}};
  return {};
}

WitnessCheck check_individuality(const TwoSortedStructure& st) {
  for (size_t a = 0; a < st.objects.size(); ++a)
    for (size_t b = a + 1; b < st.objects.size(); ++b) {
      bool separated = false;
      for (size_t p = 0; p < st.predPoints.size() && !separated; ++p) {
        uint64_t ext = st.extension_of(static_cast<int>(p));
        separated = ((ext >> a) & 1) != ((ext >> b) & 1);
      }
      if (!separated) return {false, {static_cast<int>(a), static_cast<int>(b)}};
    }
  return {};
}

bool check_fullness(const TwoSortedStructure& st) {
  std::set<uint64_t> extensions;
  for (size_t p = 0; p < st.predPoints.size(); ++p)
    extensions.insert(st.extension_of(static_cast<int>(p)));
  return extensions.size() == (size_t{1} << st.objects.size());
}

ComprehensionReport comprehension_check(const HenkinModel& model,
                                        const std::vector<Formula>& formulas,
                                        const std::string& y) {
  model.check_invariants();
  ComprehensionReport report;
  for (const auto& f : formulas) {
    check_wellformed(Language::Mso, f);
    FreeVars fv = free_variables(f);
    std::vector<std::string> objParams(fv.objects.begin(), fv.objects.end());
    objParams.erase(std::remove(objParams.begin(), objParams.end(), y), objParams.end());
    std::vector<std::string> setParams(fv.sets.begin(), fv.sets.end());

    size_t objCombos = 1;
    for (size_t i = 0; i < objParams.size(); ++i) objCombos *= model.domain.size();
    size_t setCombos = 1;
    for (size_t i = 0; i < setParams.size(); ++i) setCombos *= model.family.size();

    for (size_t oc = 0; oc < objCombos; ++oc) {
      std::map<std::string, int> oa;
      size_t rest = oc;
      for (const auto& v : objParams) {
        oa[v] = static_cast<int>(rest % model.domain.size());
        rest /= model.domain.size();
      }
      for (size_t sc = 0; sc < setCombos; ++sc) {
        std::map<std::string, uint64_t> sa;
        size_t r2 = sc;
        for (const auto& v : setParams) {
          sa[v] = model.family[r2 % model.family.size()];
          r2 /= model.family.size();
        }
        uint64_t defined = 0;
        for (size_t d = 0; d < model.domain.size(); ++d) {
          std::map<std::string, int> oaWithY = oa;
          oaWithY[y] = static_cast<int>(d);
          if (eval_mso(model, f, oaWithY, sa)) defined |= uint64_t{1} << d;
        }
        ComprehensionInstance inst;
        inst.formula = render(f);
        std::ostringstream ps;
        for (const auto& [v, d] : oa) ps << v << "=" << model.domain[d] << " ";
        for (const auto& [v, s] : sa) ps << v << "=" << model.set_to_string(s) << " ";
        inst.parameters = ps.str();
        inst.definedSet = defined;
        inst.inFamily = model.in_family(defined);
        report.allPass = report.allPass && inst.inFamily;
        report.instances.push_back(std::move(inst));
      }
    }
  }
  return report;
}

}  // namespace genmodels
