#include <doctest.h>

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "genmodels/errors.hpp"
#include "genmodels/henkin.hpp"
#include "genmodels/parser.hpp"
#include "genmodels/render.hpp"

using namespace genmodels;

namespace {

HenkinModel one_point(std::vector<uint64_t> family) {
  HenkinModel m;
  m.domain = {"a"};
  m.family = std::move(family);
  return m;
}

HenkinModel two_point(std::vector<uint64_t> family) {
  HenkinModel m;
  m.domain = {"a", "b"};
  PredInterp p;
  p.arity = 1;
  p.tuples = {{0}};
  m.predicates["p"] = p;
  m.family = std::move(family);
  return m;
}

}  // namespace

TEST_CASE("set quantifiers range over the declared family only") {
  Formula f = parse(Language::Mso, "exists2 X. X(y)");
  CHECK(eval_mso(one_point({0b1}), f, {{"y", 0}}, {}));
  CHECK_FALSE(eval_mso(one_point({0b0}), f, {{"y", 0}}, {}));
  CHECK(eval_mso_standard(one_point({0b0}), f, {{"y", 0}}, {}));

  // supplied set values must come from the family
  Formula atom = parse(Language::Mso, "X(y)");
  CHECK_THROWS_AS(eval_mso(one_point({0b0}), atom, {{"y", 0}}, {{"X", 0b1}}),
                  SemanticError);
}

TEST_CASE("standard set quantification sees every subset") {
  HenkinModel m = two_point({0b00});
  CHECK(eval_mso_standard(m, parse(Language::Mso, "forall2 X. (X(y) | ~X(y))"), {{"y", 0}},
                          {}));
  // distinct elements are separated by some subset
  Formula leibniz = parse(Language::Mso, "forall2 X. (X(x) -> X(y))");
  CHECK_FALSE(eval_mso_standard(m, leibniz, {{"x", 0}, {"y", 1}}, {}));
  CHECK(eval_mso_standard(m, leibniz, {{"x", 1}, {"y", 1}}, {}));
}

TEST_CASE("membership translation rewrites set atoms") {
  TauResult t = tau_translate(parse(Language::Mso, "exists2 X. X(y)"));
  CHECK(render(t.formula) == "existsP P. E(y,P)");

  TauResult untouched = tau_translate(parse(Language::Mso, "forall x. R(x,y)"));
  CHECK(render(untouched.formula) == "forall x. R(x,y)");

  TauResult imp = tau_translate(parse(Language::Mso, "forall2 X. (X(x) -> X(y))"));
  CHECK(render(imp.formula) == "forallP P. (E(x,P) -> E(y,P))");
  REQUIRE(imp.setVarNames.size() == 1);
  CHECK(imp.setVarNames[0].first == "X");
  CHECK(imp.setVarNames[0].second == "P");
}

TEST_CASE("two-sorted encodings are extensional by construction") {
  HenkinModel m = one_point({0b0, 0b1});
  TwoSortedStructure st = to_two_sorted(m);
  CHECK(st.predPoints.size() == 2);
  CHECK(st.e == std::set<std::pair<int, int>>{{0, 1}});
  CHECK(check_ext(st).ok);

  // duplicate extensions violate it
  TwoSortedStructure dup;
  dup.objects = {"a"};
  dup.predPoints = {"p0", "p1"};
  WitnessCheck w = check_ext(dup);
  CHECK_FALSE(w.ok);
  CHECK(w.witness == std::pair<int, int>{0, 1});
}

TEST_CASE("individuality needs a separating predicate point") {
  HenkinModel sep = two_point({0b00, 0b01});
  CHECK(check_individuality(to_two_sorted(sep)).ok);
  HenkinModel coarse = two_point({0b00});
  WitnessCheck w = check_individuality(to_two_sorted(coarse));
  CHECK_FALSE(w.ok);

  HenkinModel full = two_point(HenkinModel::powerset_family(2));
  CHECK(check_individuality(to_two_sorted(full)).ok);
}

TEST_CASE("fullness means every subset is represented") {
  CHECK(check_fullness(to_two_sorted(one_point({0b0, 0b1}))));
  CHECK_FALSE(check_fullness(to_two_sorted(two_point({0b00}))));
  for (size_t d = 1; d <= 3; ++d) {
    HenkinModel m;
    for (size_t i = 0; i < d; ++i) m.domain.push_back(std::string(1, char('a' + i)));
    m.family = HenkinModel::powerset_family(d);
    REQUIRE(check_fullness(to_two_sorted(m)));
  }
}

TEST_CASE("two-sorted evaluation follows the membership relation") {
  TwoSortedStructure st = to_two_sorted(one_point({0b0, 0b1}));
  // predicate points are named after their sets, in family order
  std::map<std::string, int> y0{{"y", 0}};
  CHECK(eval_two_sorted(st, parse(Language::TwoSorted, "E(y,P)"), y0,
                        {{"P", 1}}));
  CHECK_FALSE(eval_two_sorted(st, parse(Language::TwoSorted, "E(y,P)"), y0,
                              {{"P", 0}}));
  CHECK(eval_two_sorted(st, parse(Language::TwoSorted, "existsP P. E(y,P)"), y0, {}));

  TwoSortedStructure empty = to_two_sorted(one_point({0b0}));
  CHECK_FALSE(eval_two_sorted(empty, parse(Language::TwoSorted, "existsP P. E(y,P)"), y0, {}));
}

TEST_CASE("translated truth matches direct set-family truth") {
  std::vector<Formula> formulas = {
      parse(Language::Mso, "exists2 X. X(y)"),
      parse(Language::Mso, "exists2 X. (X(y) & ~X(x))"),
      parse(Language::Mso, "forall2 X. (X(x) -> X(y))"),
      parse(Language::Mso, "exists2 X. forall x. (X(x) -> p(x))"),
      parse(Language::Mso, "forall x. exists2 X. (X(x) & forall y. (X(y) -> x = y))"),
  };
  std::vector<std::vector<uint64_t>> families = {
      {0b00},
      {0b00, 0b01},
      {0b01, 0b10},
      HenkinModel::powerset_family(2),
  };
  for (const auto& fam : families) {
    HenkinModel m = two_point(fam);
    TwoSortedStructure st = to_two_sorted(m);
    for (const Formula& f : formulas) {
      TauResult tau = tau_translate(f);
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
          bool direct = eval_mso(m, f, {{"x", x}, {"y", y}}, {});
          bool viaTau =
              eval_two_sorted(st, tau.formula, {{"x", x}, {"y", y}}, {});
          REQUIRE(direct == viaTau);
        }
    }
  }
}

TEST_CASE("comprehension closure report") {
  HenkinModel full = two_point(HenkinModel::powerset_family(2));
  std::vector<Formula> formulas = {
      parse(Language::Mso, "y = y"),
      parse(Language::Mso, "~(y = y)"),
      parse(Language::Mso, "p(y)"),
      parse(Language::Mso, "exists2 X. (X(y) & X(x))"),
  };
  ComprehensionReport rep = comprehension_check(full, formulas);
  CHECK(rep.allPass);

  // family without the whole domain fails on "y = y"
  HenkinModel gappy = two_point({0b00, 0b01});
  ComprehensionReport bad = comprehension_check(gappy, {parse(Language::Mso, "y = y")});
  CHECK_FALSE(bad.allPass);
  REQUIRE(bad.instances.size() == 1);
  CHECK(bad.instances[0].definedSet == 0b11);
  CHECK_FALSE(bad.instances[0].inFamily);

  ComprehensionReport empt = comprehension_check(gappy, {parse(Language::Mso, "~(y = y)")});
  CHECK(empt.allPass);  // defined set ∅ is in the family
}

TEST_CASE("family growth preserves purely existential truths") {
  Formula f = parse(Language::Mso, "exists2 X. (X(y) & p(y))");
  std::vector<uint64_t> small{0b00, 0b01};
  std::vector<uint64_t> large{0b00, 0b01, 0b10, 0b11};
  HenkinModel ms = two_point(small);
  HenkinModel ml = two_point(large);
  for (int y = 0; y < 2; ++y)
    if (eval_mso(ms, f, {{"y", y}}, {})) CHECK(eval_mso(ml, f, {{"y", y}}, {}));
}

TEST_CASE("model invariants reject inconsistent inputs") {
  HenkinModel m;
  m.domain = {"a"};
  m.family = {0b10};  // mentions a second element that does not exist
  CHECK_THROWS_AS(m.check_invariants(), SemanticError);

  HenkinModel empty;
  empty.domain = {"a"};
  empty.family = {};
  CHECK_THROWS_AS(empty.check_invariants(), SemanticError);
}
