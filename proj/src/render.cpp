#include "genmodels/render.hpp"

#include <sstream>

namespace genmodels {

namespace {

// 0 binder, 1 ->, 2 |, 3 & (and =), 4 prefix, 6 atom.
int prec_of(const Formula& f) {
  switch (f->kind) {
    case Kind::Mu:
    case Kind::Nu:
    case Kind::Exists:
    case Kind::Forall:
    case Kind::PolyExists:
    case Kind::ExistsSet:
    case Kind::ForallSet:
      return 0;
    case Kind::Implies:
      return 1;
    case Kind::Or:
      return 2;
    case Kind::And:
    case Kind::Equal:
      return 3;
    case Kind::Not:
    case Kind::Diamond:
    case Kind::Box:
    case Kind::ExtDiamond:
      return 4;
    default:
      return 6;
  }
}

void emit(std::ostream& os, const Formula& f, int need);

void emit_binder(std::ostream& os, const std::string& kw, const std::string& var,
                 const Formula& body) {
  os << kw << ' ' << var << ". ";
  Kind k = body->kind;
  bool parens = k == Kind::And || k == Kind::Or || k == Kind::Implies;
  if (parens) os << '(';
  emit(os, body, 0);
  if (parens) os << ')';
}

void emit_args(std::ostream& os, const std::vector<std::string>& args) {
  os << '(';
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) os << ',';
    os << args[i];
  }
  os << ')';
}

void emit(std::ostream& os, const Formula& f, int need) {
  bool parens = prec_of(f) < need;
  if (parens) os << '(';
  switch (f->kind) {
    case Kind::PropLetter:
    case Kind::FixVar:
      os << f->name;
      break;
    case Kind::Not:
      os << '~';
      emit(os, f->kids[0], 4);
      break;
    case Kind::And:
      emit(os, f->kids[0], 3);
      os << " & ";
      emit(os, f->kids[1], 4);
      break;
    case Kind::Or:
      emit(os, f->kids[0], 2);
      os << " | ";
      emit(os, f->kids[1], 3);
      break;
    case Kind::Implies:
      emit(os, f->kids[0], 2);
      os << " -> ";
      emit(os, f->kids[1], 1);
      break;
    case Kind::Diamond:
      os << "<>";
      emit(os, f->kids[0], 4);
      break;
    case Kind::Box:
      os << "[]";
      emit(os, f->kids[0], 4);
      break;
    case Kind::Mu:
      emit_binder(os, "mu", f->name, f->kids[0]);
      break;
    case Kind::Nu:
      emit_binder(os, "nu", f->name, f->kids[0]);
      break;
    case Kind::PredAtom:
      os << f->name;
      emit_args(os, f->args);
      break;
    case Kind::Equal:
      os << f->args[0] << " = " << f->args[1];
      break;
    case Kind::Exists:
      emit_binder(os, is_pred_sort_var(f->name) ? "existsP" : "exists", f->name, f->kids[0]);
      break;
    case Kind::Forall:
      emit_binder(os, is_pred_sort_var(f->name) ? "forallP" : "forall", f->name, f->kids[0]);
      break;
    case Kind::PolyExists: {
      os << "exists ";
      emit_args(os, f->args);
      os << ". ";
      Kind k = f->kids[0]->kind;
      bool p = k == Kind::And || k == Kind::Or || k == Kind::Implies;
      if (p) os << '(';
      emit(os, f->kids[0], 0);
      if (p) os << ')';
      break;
    }
    case Kind::ExtDiamond:
      os << "ext ";
      emit(os, f->kids[0], 4);
      break;
    case Kind::SetAtom:
      os << f->name;
      emit_args(os, f->args);
      break;
    case Kind::ExistsSet:
      emit_binder(os, "exists2", f->name, f->kids[0]);
      break;
    case Kind::ForallSet:
      emit_binder(os, "forall2", f->name, f->kids[0]);
      break;
    case Kind::EAtom:
      os << 'E';
      emit_args(os, f->args);
      break;
  }
  if (parens) os << ')';
}

}  // namespace

std::string render(const Formula& f) {
  std::ostringstream os;
  emit(os, f, 0);
  return os.str();
}

}  // namespace genmodels
