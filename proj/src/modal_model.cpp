#include "genmodels/modal_model.hpp"

#include "genmodels/errors.hpp"

namespace genmodels {

Semantics semantics_from_string(const std::string& s) {
  if (s == "standard") return Semantics::Standard;
  if (s == "general") return Semantics::General;
  throw InputError("unknown semantics: " + s);
}

ModalModel::ModalModel(GeneralFrame gf, std::map<std::string, uint64_t> valuation)
    : gf_(std::move(gf)), valuation_(std::move(valuation)) {
  FrameReport report = validate_general_frame(gf_);
  if (!report.ok())
    throw SemanticError(SemanticError::Code::ClosureViolation,
                        "family is not closed:\n" + report.to_string(gf_.frame));
  for (const auto& [letter, value] : valuation_) {
    if (value & ~gf_.frame.universe())
      throw SemanticError(SemanticError::Code::InvalidModel,
                          "valuation of " + letter + " mentions unknown worlds");
    if (!gf_.family.contains(value))
      throw SemanticError(SemanticError::Code::NotAdmissible,
                          "valuation of " + letter + " is not admissible: " +
                              gf_.frame.set_to_string(value));
  }
}

namespace {

// The two backends expose the same vocabulary so one evaluator serves both.
struct ExplicitDomain {
  using Set = uint64_t;
  const ModalModel& model;

  Set universe() const { return model.frame().universe(); }
  Set empty() const { return 0; }
  Set complement(Set s) const { return universe() & ~s; }
  Set join(Set a, Set b) const { return a | b; }
  Set meet(Set a, Set b) const { return a & b; }
  Set diamond(Set s) const { return model.frame().diamond(s); }
  bool admissible(Set s) const { return model.general_frame().family.contains(s); }

  Set letter(const std::string& name) const {
    auto it = model.valuation().find(name);
    if (it == model.valuation().end())
      throw SemanticError(SemanticError::Code::UnknownLetter,
                          "no valuation for proposition letter " + name);
    return it->second;
  }

  Set lfp(Semantics sem, const std::function<Set(Set)>& op) const {
    if (sem == Semantics::Standard || model.general_frame().family.full)
      return lfp_standard(model.frame(), op).value;
    return lfp_general(model.general_frame(), op).value;
  }
};

struct SymbolicDomain {
  using Set = CofinSet;
  const Fig1Model& model;

  Set universe() const { return CofinSet::universe(); }
  Set empty() const { return CofinSet::empty(); }
  Set complement(const Set& s) const { return s.complement(); }
  Set join(const Set& a, const Set& b) const { return set_union(a, b); }
  Set meet(const Set& a, const Set& b) const { return set_intersection(a, b); }
  Set diamond(const Set& s) const { return fig1_diamond(s); }
  bool admissible(const Set&) const { return true; }  // every CofinSet is

  Set letter(const std::string& name) const {
    auto it = model.valuation.find(name);
    if (it == model.valuation.end())
      throw SemanticError(SemanticError::Code::UnknownLetter,
                          "no valuation for proposition letter " + name);
    return it->second;
  }

  Set lfp(Semantics sem, const std::function<Set(const Set&)>& op) const {
    if (sem == Semantics::Standard) {
      SymbolicLfpResult r = fig1_lfp_standard(op, model.bound + 2);
      if (!r.converged)
        throw SemanticError(SemanticError::Code::DivergentLfp,
                            "standard iteration does not close within the bound; "
                            "last iterate " + r.prefix.to_string());
      return r.value;
    }
    return fig1_lfp_general(op, model.bound);
  }
};

template <class D>
typename D::Set eval_modal(const D& dom, const Formula& f, Semantics sem,
                           std::map<std::string, typename D::Set>& env) {
  using Set = typename D::Set;
  switch (f->kind) {
    case Kind::PropLetter:
      return dom.letter(f->name);
    case Kind::FixVar: {
      auto it = env.find(f->name);
      if (it == env.end())
        throw SemanticError(SemanticError::Code::UnknownVariable,
                            "fixpoint variable " + f->name + " is not bound");
      return it->second;
    }
    case Kind::Not:
      return dom.complement(eval_modal(dom, f->kids[0], sem, env));
    case Kind::And:
      return dom.meet(eval_modal(dom, f->kids[0], sem, env),
                      eval_modal(dom, f->kids[1], sem, env));
    case Kind::Or:
      return dom.join(eval_modal(dom, f->kids[0], sem, env),
                      eval_modal(dom, f->kids[1], sem, env));
    case Kind::Implies:
      return dom.join(dom.complement(eval_modal(dom, f->kids[0], sem, env)),
                      eval_modal(dom, f->kids[1], sem, env));
    case Kind::Diamond:
      return dom.diamond(eval_modal(dom, f->kids[0], sem, env));
    case Kind::Box:
      return dom.complement(dom.diamond(dom.complement(eval_modal(dom, f->kids[0], sem, env))));
    case Kind::Mu: {
      auto op = [&](const Set& s) {
        auto saved = env.find(f->name);
        Set old{};
        bool had = saved != env.end();
        if (had) old = saved->second;
        env[f->name] = s;
        Set r = eval_modal(dom, f->kids[0], sem, env);
        if (had)
          env[f->name] = old;
        else
          env.erase(f->name);
        return r;
      };
      try {
        return dom.lfp(sem, op);
      } catch (const SemanticError& e) {
        if (e.code() == SemanticError::Code::NotGeneralMuFrame)
          throw SemanticError(SemanticError::Code::NotAdmissible, e.what());
        throw;
      }
    }
    case Kind::Nu: {
      // nu X. body = ~ mu X. ~body[X := ~X], evaluated semantically
      auto dual = [&](const Set& s) {
        auto saved = env.find(f->name);
        Set old{};
        bool had = saved != env.end();
        if (had) old = saved->second;
        env[f->name] = dom.complement(s);
        Set r = dom.complement(eval_modal(dom, f->kids[0], sem, env));
        if (had)
          env[f->name] = old;
        else
          env.erase(f->name);
        return r;
      };
      try {
        return dom.complement(dom.lfp(sem, dual));
      } catch (const SemanticError& e) {
        if (e.code() == SemanticError::Code::NotGeneralMuFrame)
          throw SemanticError(SemanticError::Code::NotAdmissible, e.what());
        throw;
      }
    }
    default:
      throw SemanticError(SemanticError::Code::InvalidFormula,
                          "not a modal formula node");
  }
}

}  // namespace

uint64_t extension(const ModalModel& model, const Formula& f, Semantics sem,
                   const std::map<std::string, uint64_t>& env) {
  check_wellformed(Language::Modal, f);
  ExplicitDomain dom{model};
  if (sem == Semantics::General)
    for (const auto& [var, value] : env)
      if (!dom.admissible(value))
        throw SemanticError(SemanticError::Code::NotAdmissible,
                            "environment value for " + var + " is not admissible");
  std::map<std::string, uint64_t> scratch = env;
  return eval_modal(dom, f, sem, scratch);
}

CofinSet extension(const Fig1Model& model, const Formula& f, Semantics sem,
                   const std::map<std::string, CofinSet>& env) {
  check_wellformed(Language::Modal, f);
  SymbolicDomain dom{model};
  std::map<std::string, CofinSet> scratch = env;
  return eval_modal(dom, f, sem, scratch);
}

}  // namespace genmodels
