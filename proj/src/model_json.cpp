#include "genmodels/model_json.hpp"

#include <algorithm>
#include <fstream>

#include "genmodels/errors.hpp"

namespace genmodels {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw InputError("missing field \"" + key + "\"");
  return j[key];
}

std::vector<std::string> string_list(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(what + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

int index_in(const std::vector<std::string>& names, const std::string& name,
             const std::string& what) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  throw InputError("unknown " + what + ": " + name);
}

uint64_t mask_from_names(const nlohmann::json& j, const std::vector<std::string>& names,
                         const std::string& what) {
  uint64_t mask = 0;
  for (const auto& e : string_list(j, what)) mask |= uint64_t{1} << index_in(names, e, what);
  return mask;
}

std::map<std::string, PredInterp> predicates_from_json(const nlohmann::json& j,
                                                       const std::vector<std::string>& domain) {
  std::map<std::string, PredInterp> out;
  if (j.is_null()) return out;
  if (!j.is_object()) throw InputError("\"predicates\" must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    PredInterp p;
    p.arity = field(it.value(), "arity").get<int>();
    if (p.arity < 1) throw InputError("predicate " + it.key() + " needs arity >= 1");
    for (const auto& tup : field(it.value(), "tuples")) {
      std::vector<int> t;
      for (const auto& e : tup)
        t.push_back(index_in(domain, e.get<std::string>(), "domain element"));
      if (static_cast<int>(t.size()) != p.arity)
        throw InputError("tuple arity mismatch for predicate " + it.key());
      p.tuples.insert(std::move(t));
    }
    out[it.key()] = std::move(p);
  }
  return out;
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse " + path + ": " + e.what());
  }
  return j;
}

nlohmann::json cofin_set_to_json(const CofinSet& s) {
  nlohmann::json j;
  if (s.is_cofinite()) {
    j["kind"] = "cofinite";
    j["excluded"] = s.support();
  } else {
    j["kind"] = "finite";
    j["elements"] = s.support();
  }
  return j;
}

CofinSet cofin_set_from_json(const nlohmann::json& j) {
  if (j.is_array()) return CofinSet::finite(j.get<std::vector<uint32_t>>());
  if (j.is_object() && j.contains("cofinite"))
    return CofinSet::cofinite(j["cofinite"].get<std::vector<uint32_t>>());
  if (j.is_object() && j.contains("kind")) {
    std::string kind = j["kind"].get<std::string>();
    if (kind == "finite") return CofinSet::finite(field(j, "elements").get<std::vector<uint32_t>>());
    if (kind == "cofinite")
      return CofinSet::cofinite(field(j, "excluded").get<std::vector<uint32_t>>());
  }
  throw InputError("a symbolic set is an array of naturals or {\"cofinite\":[...]}");
}

AnyModalModel modal_model_from_json(const nlohmann::json& j) {
  const nlohmann::json& family = field(j, "family");
  if (family.is_object() && family.contains("symbolic")) {
    if (family["symbolic"].get<std::string>() != "finite-cofinite")
      throw InputError("unknown symbolic family: " + family["symbolic"].get<std::string>());
    Fig1Model model;
    if (family.contains("bound")) model.bound = family["bound"].get<int>();
    if (model.bound < 1 || model.bound > 100000) throw InputError("bound out of range");
    if (j.contains("valuation"))
      for (auto it = j["valuation"].begin(); it != j["valuation"].end(); ++it)
        model.valuation[it.key()] = cofin_set_from_json(it.value());
    return model;
  }
  GeneralFrame gf = general_frame_from_json(j);
  std::map<std::string, uint64_t> valuation;
  if (j.contains("valuation"))
    for (auto it = j["valuation"].begin(); it != j["valuation"].end(); ++it)
      valuation[it.key()] = mask_from_names(it.value(), gf.frame.worlds(), "world");
  return ModalModel(std::move(gf), std::move(valuation));
}

GeneralFrame general_frame_from_json(const nlohmann::json& j) {
  std::vector<std::string> worlds = string_list(field(j, "worlds"), "\"worlds\"");
  std::vector<std::pair<std::string, std::string>> rel;
  if (j.contains("rel"))
    for (const auto& pair : j["rel"]) {
      if (!pair.is_array() || pair.size() != 2) throw InputError("\"rel\" entries are pairs");
      rel.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  KripkeFrame frame(std::move(worlds), rel);
  AdmissibleFamily fam;
  if (!j.contains("family") || (j["family"].is_string() && j["family"] == "full")) {
    fam = AdmissibleFamily::full_family();
  } else if (j["family"].is_array()) {
    std::vector<uint64_t> sets;
    for (const auto& s : j["family"]) sets.push_back(mask_from_names(s, frame.worlds(), "world"));
    fam = AdmissibleFamily::explicit_family(std::move(sets));
  } else {
    throw InputError("\"family\" must be \"full\" or an array of world-sets");
  }
  return {std::move(frame), std::move(fam)};
}

nlohmann::json general_frame_to_json(const GeneralFrame& gf) {
  nlohmann::json j;
  j["worlds"] = gf.frame.worlds();
  nlohmann::json rel = nlohmann::json::array();
  for (size_t u = 0; u < gf.frame.size(); ++u)
    for (size_t v = 0; v < gf.frame.size(); ++v)
      if (gf.frame.related(static_cast<int>(u), static_cast<int>(v)))
        rel.push_back({gf.frame.worlds()[u], gf.frame.worlds()[v]});
  j["rel"] = rel;
  if (gf.family.full) {
    j["family"] = "full";
  } else {
    nlohmann::json fam = nlohmann::json::array();
    for (uint64_t s : gf.family.sets) {
      nlohmann::json one = nlohmann::json::array();
      for (size_t i = 0; i < gf.frame.size(); ++i)
        if ((s >> i) & 1) one.push_back(gf.frame.worlds()[i]);
      fam.push_back(one);
    }
    j["family"] = fam;
  }
  return j;
}

AlgebraTables algebra_tables_from_json(const nlohmann::json& j) {
  AlgebraTables t;
  t.carrier = string_list(field(j, "carrier"), "\"carrier\"");
  auto binary = [&](const std::string& key) {
    std::vector<std::vector<int>> out;
    for (const auto& row : field(j, key)) out.push_back(row.get<std::vector<int>>());
    return out;
  };
  t.join = binary("join");
  t.meet = binary("meet");
  t.neg = field(j, "neg").get<std::vector<int>>();
  t.diamond = field(j, "diamond").get<std::vector<int>>();
  t.bot = field(j, "bot").get<int>();
  t.top = field(j, "top").get<int>();
  return t;
}

nlohmann::json algebra_tables_to_json(const AlgebraTables& t) {
  nlohmann::json j;
  j["carrier"] = t.carrier;
  j["join"] = t.join;
  j["meet"] = t.meet;
  j["neg"] = t.neg;
  j["bot"] = t.bot;
  j["top"] = t.top;
  j["diamond"] = t.diamond;
  return j;
}

GAModel ga_model_from_json(const nlohmann::json& j) {
  GAModel m;
  m.domain = string_list(field(j, "domain"), "\"domain\"");
  if (j.contains("predicates")) m.predicates = predicates_from_json(j["predicates"], m.domain);
  m.variables = string_list(field(j, "variables"), "\"variables\"");
  for (const auto& tup : field(j, "assignments")) {
    std::vector<int> t;
    for (const auto& e : tup) t.push_back(index_in(m.domain, e.get<std::string>(), "domain element"));
    if (t.size() != m.variables.size())
      throw InputError("assignment tuple length must match \"variables\"");
    m.assignments.insert(std::move(t));
  }
  m.check_invariants();
  return m;
}

HenkinModel henkin_model_from_json(const nlohmann::json& j) {
  HenkinModel m;
  m.domain = string_list(field(j, "domain"), "\"domain\"");
  if (j.contains("predicates")) m.predicates = predicates_from_json(j["predicates"], m.domain);
  const nlohmann::json& fam = field(j, "family");
  if (fam.is_string() && fam == "full") {
    m.family = HenkinModel::powerset_family(m.domain.size());
  } else if (fam.is_array()) {
    std::vector<uint64_t> sets;
    for (const auto& s : fam) sets.push_back(mask_from_names(s, m.domain, "domain element"));
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    m.family = std::move(sets);
  } else {
    throw InputError("\"family\" must be \"full\" or an array of element-sets");
  }
  m.check_invariants();
  return m;
}

TwoSortedStructure two_sorted_from_json(const nlohmann::json& j) {
  TwoSortedStructure st;
  st.objects = string_list(field(j, "objects"), "\"objects\"");
  st.predPoints = string_list(field(j, "predPoints"), "\"predPoints\"");
  for (const auto& pair : field(j, "E")) {
    if (!pair.is_array() || pair.size() != 2) throw InputError("\"E\" entries are pairs");
    st.e.insert({index_in(st.objects, pair[0].get<std::string>(), "object"),
                 index_in(st.predPoints, pair[1].get<std::string>(), "predicate point")});
  }
  if (j.contains("predicates"))
    st.predicates = predicates_from_json(j["predicates"], st.objects);
  st.check_invariants();
  return st;
}

BinaryRelation relation_from_json(const nlohmann::json& j) {
  BinaryRelation r;
  r.universe = string_list(field(j, "universe"), "\"universe\"");
  for (const auto& pair : field(j, "pairs")) {
    if (!pair.is_array() || pair.size() != 2) throw InputError("\"pairs\" entries are pairs");
    r.pairs.insert({index_in(r.universe, pair[0].get<std::string>(), "universe element"),
                    index_in(r.universe, pair[1].get<std::string>(), "universe element")});
  }
  r.check_invariants();
  return r;
}

nlohmann::json relation_to_json(const BinaryRelation& r) {
  nlohmann::json j;
  j["universe"] = r.universe;
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : r.pairs) pairs.push_back({r.universe[a], r.universe[b]});
  j["pairs"] = pairs;
  return j;
}

AbstractAssignmentFrame assignment_frame_from_json(const nlohmann::json& j) {
  AbstractAssignmentFrame f;
  f.states = string_list(field(j, "states"), "\"states\"");
  if (f.states.empty() || f.states.size() > 64)
    throw InputError("between 1 and 64 states supported");
  const nlohmann::json& trans = field(j, "transitions");
  if (!trans.is_object()) throw InputError("\"transitions\" must be an object");
  for (auto it = trans.begin(); it != trans.end(); ++it) {
    std::vector<uint64_t> rel(f.states.size(), 0);
    for (const auto& pair : it.value()) {
      if (!pair.is_array() || pair.size() != 2)
        throw InputError("transition entries are state pairs");
      int a = index_in(f.states, pair[0].get<std::string>(), "state");
      int b = index_in(f.states, pair[1].get<std::string>(), "state");
      rel[a] |= uint64_t{1} << b;
    }
    f.transitions[it.key()] = std::move(rel);
  }
  if (j.contains("valuations"))
    for (auto it = j["valuations"].begin(); it != j["valuations"].end(); ++it)
      f.atomValuations[it.key()] = mask_from_names(it.value(), f.states, "state");
  return f;
}

}  // namespace genmodels
