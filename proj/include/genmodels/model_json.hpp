#pragma once

#include <nlohmann/json.hpp>
#include <variant>

#include "genmodels/algebra.hpp"
#include "genmodels/cofinite.hpp"
#include "genmodels/fixpoint.hpp"
#include "genmodels/ga.hpp"
#include "genmodels/henkin.hpp"
#include "genmodels/kripke.hpp"
#include "genmodels/modal_model.hpp"

namespace genmodels {

// Modal model files carry either an explicit frame or the symbolic
// finite/cofinite one: {"worlds":[...], "rel":[[u,v],...],
// "family":"full"|[[...],...]|{"symbolic":"finite-cofinite","bound":B},
// "valuation":{"p":[...]}}. Symbolic valuation values are arrays of naturals
// or {"cofinite":[excluded...]}.
using AnyModalModel = std::variant<ModalModel, Fig1Model>;
AnyModalModel modal_model_from_json(const nlohmann::json& j);

nlohmann::json general_frame_to_json(const GeneralFrame& gf);
GeneralFrame general_frame_from_json(const nlohmann::json& j);

nlohmann::json cofin_set_to_json(const CofinSet& s);
CofinSet cofin_set_from_json(const nlohmann::json& j);

// {"carrier":[...], "join":[[...]], "meet":[[...]], "neg":[...],
//  "bot":i, "top":i, "diamond":[...]}, tables indexed by carrier order.
AlgebraTables algebra_tables_from_json(const nlohmann::json& j);
nlohmann::json algebra_tables_to_json(const AlgebraTables& t);

// {"domain":[...], "predicates":{"R":{"arity":2,"tuples":[["a","b"]]}},
//  "variables":[...], "assignments":[[...],...]}
GAModel ga_model_from_json(const nlohmann::json& j);

// {"domain":[...], "predicates":{...}, "family":[[...],...]|"full"}
HenkinModel henkin_model_from_json(const nlohmann::json& j);

// {"objects":[...], "predPoints":[...], "E":[[o,p],...], "predicates":{...}}
TwoSortedStructure two_sorted_from_json(const nlohmann::json& j);

// {"universe":[...], "pairs":[[u,v],...]}
BinaryRelation relation_from_json(const nlohmann::json& j);
nlohmann::json relation_to_json(const BinaryRelation& r);

// {"states":[...], "transitions":{"x":[[s,t],...]}, "valuations":{"S":[...]}}
AbstractAssignmentFrame assignment_frame_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

}  // namespace genmodels
