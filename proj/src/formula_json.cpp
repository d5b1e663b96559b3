#include "genmodels/formula_json.hpp"

#include <map>

#include "genmodels/errors.hpp"

namespace genmodels {

namespace {

const std::map<Kind, std::string> kKindNames = {
    {Kind::Not, "not"},           {Kind::And, "and"},
    {Kind::Or, "or"},             {Kind::Implies, "implies"},
    {Kind::PropLetter, "prop"},   {Kind::FixVar, "fixvar"},
    {Kind::Diamond, "diamond"},   {Kind::Box, "box"},
    {Kind::Mu, "mu"},             {Kind::Nu, "nu"},
    {Kind::PredAtom, "pred"},     {Kind::Equal, "equal"},
    {Kind::Exists, "exists"},     {Kind::Forall, "forall"},
    {Kind::PolyExists, "poly_exists"}, {Kind::ExtDiamond, "ext"},
    {Kind::SetAtom, "set_atom"},  {Kind::ExistsSet, "exists_set"},
    {Kind::ForallSet, "forall_set"}, {Kind::EAtom, "e_atom"},
};

struct Shape {
  bool name;
  int args;  // -1 = one or more
  int kids;
};

Shape shape_of(Kind k) {
  switch (k) {
    case Kind::Not:
    case Kind::Diamond:
    case Kind::Box:
    case Kind::ExtDiamond:
      return {false, 0, 1};
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      return {false, 0, 2};
    case Kind::PropLetter:
    case Kind::FixVar:
      return {true, 0, 0};
    case Kind::Mu:
    case Kind::Nu:
    case Kind::Exists:
    case Kind::Forall:
    case Kind::ExistsSet:
    case Kind::ForallSet:
      return {true, 0, 1};
    case Kind::PredAtom:
      return {true, -1, 0};
    case Kind::Equal:
    case Kind::EAtom:
      return {false, 2, 0};
    case Kind::PolyExists:
      return {false, -1, 1};
    case Kind::SetAtom:
      return {true, 1, 0};
  }
  return {false, 0, 0};
}

}  // namespace

std::string kind_to_string(Kind k) { return kKindNames.at(k); }

Kind kind_from_string(const std::string& s) {
  for (const auto& [k, n] : kKindNames)
    if (n == s) return k;
  throw InputError("unknown formula kind: " + s);
}

nlohmann::json formula_to_json(const Formula& f) {
  nlohmann::json j;
  j["kind"] = kind_to_string(f->kind);
  if (!f->name.empty()) j["name"] = f->name;
  if (!f->args.empty()) j["args"] = f->args;
  if (!f->kids.empty()) {
    nlohmann::json kids = nlohmann::json::array();
    for (const auto& k : f->kids) kids.push_back(formula_to_json(k));
    j["kids"] = kids;
  }
  return j;
}

Formula formula_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InputError("formula JSON needs a string \"kind\"");
  Kind k = kind_from_string(j["kind"].get<std::string>());
  Shape s = shape_of(k);
  std::string name;
  if (j.contains("name")) name = j["name"].get<std::string>();
  if (s.name && name.empty()) throw InputError("formula kind needs a \"name\"");
  std::vector<std::string> args;
  if (j.contains("args"))
    for (const auto& a : j["args"]) args.push_back(a.get<std::string>());
  if (s.args >= 0 && static_cast<int>(args.size()) != s.args)
    throw InputError("wrong argument count for formula kind " + j["kind"].get<std::string>());
  if (s.args == -1 && args.empty())
    throw InputError("formula kind needs arguments: " + j["kind"].get<std::string>());
  std::vector<Formula> kids;
  if (j.contains("kids"))
    for (const auto& c : j["kids"]) kids.push_back(formula_from_json(c));
  if (static_cast<int>(kids.size()) != s.kids)
    throw InputError("wrong subformula count for formula kind " + j["kind"].get<std::string>());
  return std::make_shared<const Node>(k, std::move(name), std::move(args), std::move(kids));
}

}  // namespace genmodels
