#include <doctest.h>

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "genmodels/errors.hpp"
#include "genmodels/formula.hpp"
#include "genmodels/generate.hpp"
#include "genmodels/kripke.hpp"
#include "genmodels/modal_model.hpp"
#include "genmodels/parser.hpp"
#include "genmodels/render.hpp"

using namespace genmodels;

TEST_CASE("parsing builds the expected trees") {
  Formula f = parse(Language::Modal, "mu X. (p | <>X)");
  CHECK(structurally_equal(f, mu("X", disj(prop("p"), diamond(fixvar("X"))))));

  Formula g = parse(Language::Mso, "exists2 X. X(y)");
  CHECK(structurally_equal(g, exists_set("X", set_atom("X", "y"))));

  Formula h = parse(Language::Fol, "exists (x,y). (P(x) & Q(y))");
  CHECK(structurally_equal(
      h, poly_exists({"x", "y"}, conj(pred("P", {"x"}), pred("Q", {"y"})))));

  CHECK(structurally_equal(parse(Language::Fol, "ext exists x. P(x)"),
                           ext_dia(exists("x", pred("P", {"x"})))));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse(Language::Modal, "mu X. ("), ParseError);
  CHECK_THROWS_AS(parse(Language::Modal, "p &"), ParseError);
  CHECK_THROWS_AS(parse(Language::Fol, "exists . P(x)"), ParseError);
  try {
    parse(Language::Modal, "p |\n& q");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("well-formedness rejects bad binders and sorts") {
  // fixpoint variable under one negation
  CHECK_THROWS_AS(parse(Language::Modal, "mu X. ~X"), SemanticError);
  // quantifiers have no place in modal formulas
  CHECK_THROWS_AS(parse(Language::Modal, "exists x. p"), ParseError);
  // modal operators have no place in first-order formulas
  CHECK_THROWS_AS(parse(Language::Fol, "<>P(x)"), ParseError);
  // uppercase names are not object variables
  CHECK_THROWS_AS(check_wellformed(Language::Fol, pred("R", {"x", "Y"})), SemanticError);
  // duplicate variables in a simultaneous re-assignment
  CHECK_THROWS_AS(check_wellformed(Language::Fol, poly_exists({"x", "x"}, pred("P", {"x"}))),
                  SemanticError);
  // set atoms only exist in the second-order language
  CHECK_THROWS_AS(check_wellformed(Language::Fol, set_atom("X", "y")), SemanticError);
}

TEST_CASE("rendering matches the textual grammar") {
  CHECK(render(diamond(prop("p"))) == "<>p");
  CHECK(render(mu("X", disj(prop("p"), diamond(fixvar("X"))))) == "mu X. (p | <>X)");
  CHECK(render(eq("x", "y")) == "x = y");
  CHECK(render(poly_exists({"x", "y"}, pred("R", {"x", "y"}))) == "exists (x,y). R(x,y)");
}

TEST_CASE("free variables per namespace") {
  FreeVars fv1 = free_variables(parse(Language::Fol, "exists x. R(x,y)"));
  CHECK(fv1.objects == std::set<std::string>{"y"});

  FreeVars fv2 = free_variables(parse(Language::Modal, "mu X. (p | <>X)"));
  CHECK(fv2.fixpoints.empty());
  CHECK(fv2.letters == std::set<std::string>{"p"});

  FreeVars fv3 = free_variables(parse(Language::Mso, "exists2 X. X(y)"));
  CHECK(fv3.sets.empty());
  CHECK(fv3.objects == std::set<std::string>{"y"});

  FreeVars fv4 = free_variables(parse(Language::TwoSorted, "existsP P. E(y,P)"));
  CHECK(fv4.preds.empty());
  CHECK(fv4.objects == std::set<std::string>{"y"});
}

TEST_CASE("shadowed uppercase binders are renamed apart") {
  Formula f = parse(Language::Modal, "mu X. (p | <>(mu X. (q | <>X)))");
  // inner binder gets a fresh name; both binders still close their bodies
  FreeVars fv = free_variables(f);
  CHECK(fv.fixpoints.empty());
  std::string outer = f->name;
  std::string inner;
  std::function<void(const Formula&)> find = [&](const Formula& g) {
    if ((g->kind == Kind::Mu) && g != f) inner = g->name;
    for (const auto& k : g->kids) find(k);
  };
  find(f);
  CHECK(inner != outer);
}

TEST_CASE("guard pattern recognition") {
  std::set<std::string> guards{"G"};
  CHECK(is_guarded(parse(Language::Fol, "exists y. (G(x,y) & R(x,y))"), guards));
  CHECK_FALSE(is_guarded(parse(Language::Fol, "exists y. R(x,y)"), guards));
  CHECK_FALSE(
      is_guarded(parse(Language::Fol, "exists y. (G(x,y) & exists z. R(y,z))"), guards));
  // universal dual uses implication
  CHECK(is_guarded(parse(Language::Fol, "forall y. (G(x,y) -> R(x,y))"), guards));
  // quantifier-free formulas are vacuously guarded
  CHECK(is_guarded(parse(Language::Fol, "P(x) & R(x,y)"), guards));
}

TEST_CASE("guardedness is closed under quantified subformulas") {
  std::set<std::string> guards{"G"};
  std::vector<Formula> samples = {
      parse(Language::Fol, "exists y. (G(x,y) & R(x,y))"),
      parse(Language::Fol, "forall x. (G(x,y) -> exists z. (G(y,z) & R(y,z)))"),
      parse(Language::Fol, "exists x. (G(x,y) & (P(x) | exists z. (G(x,z) & x = z)))"),
  };
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f->kind == Kind::Exists || f->kind == Kind::Forall) CHECK(is_guarded(f, guards));
    for (const auto& k : f->kids) walk(k);
  };
  for (const auto& f : samples) {
    REQUIRE(is_guarded(f, guards));
    walk(f);
  }
}

namespace {

FormulaGrammar modal_grammar() {
  FormulaGrammar g;
  g.atoms = {prop("p"), prop("q"), fixvar("X")};
  g.wrappers = {[](const Formula& f) { return diamond(f); },
                [](const Formula& f) { return box(f); },
                [](const Formula& f) { return mu("X", f); },
                [](const Formula& f) { return nu("Y", f); }};
  return g;
}

FormulaGrammar fol_grammar() {
  FormulaGrammar g;
  g.atoms = {pred("P", {"x"}), pred("R", {"x", "y"}), eq("x", "y")};
  g.wrappers = {[](const Formula& f) { return exists("x", f); },
                [](const Formula& f) { return forall("y", f); },
                [](const Formula& f) { return poly_exists({"x", "y"}, f); },
                [](const Formula& f) { return ext_dia(f); }};
  return g;
}

FormulaGrammar mso_grammar() {
  FormulaGrammar g;
  g.atoms = {pred("p", {"x"}), set_atom("X", "y"), eq("x", "y")};
  g.wrappers = {[](const Formula& f) { return exists("x", f); },
                [](const Formula& f) { return forall("y", f); },
                [](const Formula& f) { return exists_set("X", f); },
                [](const Formula& f) { return forall_set("Y", f); }};
  return g;
}

FormulaGrammar two_sorted_grammar() {
  FormulaGrammar g;
  g.atoms = {pred("p", {"x"}), e_atom("y", "P"), eq("x", "y")};
  g.wrappers = {[](const Formula& f) { return exists("x", f); },
                [](const Formula& f) { return exists("P", f); },
                [](const Formula& f) { return forall("P2", f); }};
  return g;
}

// Parsing renames shadowed binders, so round-trip through one normalizing
// pass first; the normal form must then be a fixed point.
void check_roundtrip(Language lang, const FormulaGrammar& grammar, uint64_t seed) {
  std::vector<Formula> pool = grammar.up_to_depth(2);
  std::vector<Formula> sampled = grammar.samples(300, 5, seed);
  pool.insert(pool.end(), sampled.begin(), sampled.end());
  int covered = 0;
  for (const Formula& f : pool) {
    try {
      check_wellformed(lang, f);
    } catch (const SemanticError&) {
      continue;
    }
    Formula normal = parse(lang, render(f));
    Formula again = parse(lang, render(normal));
    CHECK(structurally_equal(normal, again));
    ++covered;
  }
  CHECK(covered > 100);
}

}  // namespace

TEST_CASE("parse inverts render on generated formulas") {
  check_roundtrip(Language::Modal, modal_grammar(), 11);
  check_roundtrip(Language::Fol, fol_grammar(), 12);
  check_roundtrip(Language::Mso, mso_grammar(), 13);
  check_roundtrip(Language::TwoSorted, two_sorted_grammar(), 14);
}

TEST_CASE("first-order binders keep their names verbatim") {
  Formula f = parse(Language::Fol, "exists x. (P(x) & exists x. P(x))");
  CHECK(structurally_equal(f, exists("x", conj(pred("P", {"x"}),
                                               exists("x", pred("P", {"x"}))))));
}

TEST_CASE("positive formulas are monotone in their fixpoint variable") {
  FormulaGrammar g;
  g.atoms = {prop("p"), fixvar("X")};
  g.wrappers = {[](const Formula& f) { return diamond(f); },
                [](const Formula& f) { return box(f); }};
  std::vector<Formula> formulas = g.up_to_depth(2);

  int positives = 0;
  for (uint32_t bits = 0; bits < 16; ++bits) {
    // all two-world frames
    KripkeFrame frame({"w0", "w1"}, std::vector<uint64_t>{bits & 3u, (bits >> 2) & 3u});
    for (uint64_t p = 0; p < 4; ++p) {
      ModalModel model({frame, AdmissibleFamily::full_family()}, {{"p", p}});
      for (const Formula& f : formulas) {
        if (!is_positive_in(f, "X")) continue;
        ++positives;
        for (uint64_t s = 0; s < 4; ++s)
          for (uint64_t t = 0; t < 4; ++t) {
            if ((s & t) != s) continue;  // only s ⊆ t
            uint64_t lo = extension(model, f, Semantics::Standard, {{"X", s}});
            uint64_t hi = extension(model, f, Semantics::Standard, {{"X", t}});
            REQUIRE((lo & hi) == lo);
          }
      }
    }
  }
  CHECK(positives > 0);
}
