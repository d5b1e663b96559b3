#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "genmodels/algebra.hpp"
#include "genmodels/errors.hpp"
#include "genmodels/generate.hpp"
#include "genmodels/kripke.hpp"
#include "genmodels/modal_model.hpp"
#include "genmodels/parser.hpp"

using namespace genmodels;

namespace {

AlgebraTables two_element(std::vector<int> dia) {
  AlgebraTables t;
  t.carrier = {"0", "1"};
  t.join = {{0, 1}, {1, 1}};
  t.meet = {{0, 0}, {0, 1}};
  t.neg = {1, 0};
  t.bot = 0;
  t.top = 1;
  t.diamond = std::move(dia);
  return t;
}

// Powerset algebra over `atoms` bits; element index = mask; diamond is
// determined by its atom values (normality).
AlgebraTables powerset(int atoms, const std::vector<int>& diaAtom) {
  int n = 1 << atoms;
  AlgebraTables t;
  t.bot = 0;
  t.top = n - 1;
  for (int m = 0; m < n; ++m) t.carrier.push_back("e" + std::to_string(m));
  t.join.assign(n, std::vector<int>(n));
  t.meet.assign(n, std::vector<int>(n));
  t.neg.assign(n, 0);
  t.diamond.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    t.neg[a] = a ^ (n - 1);
    for (int b = 0; b < n; ++b) {
      t.join[a][b] = a | b;
      t.meet[a][b] = a & b;
    }
    int d = 0;
    for (int i = 0; i < atoms; ++i)
      if ((a >> i) & 1) d |= diaAtom[i];
    t.diamond[a] = d;
  }
  return t;
}

KripkeFrame k2() { return KripkeFrame({"w0", "w1"}, {{"w0", "w1"}}); }

}  // namespace

TEST_CASE("axiom validation accepts lawful tables and pins violations") {
  CHECK(validate_modal_algebra(two_element({0, 1})).ok);
  AlgebraReport bad = validate_modal_algebra(two_element({1, 1}));
  CHECK_FALSE(bad.ok);
  CHECK(validate_modal_algebra(powerset(2, {1, 2})).ok);  // diamond = identity
  // malformed table shapes throw rather than report
  AlgebraTables t = two_element({0, 1});
  t.join.pop_back();
  CHECK_THROWS_AS(validate_modal_algebra(t), SemanticError);
}

TEST_CASE("serial and parallel validation give the same answer") {
  std::vector<AlgebraTables> cases = {two_element({0, 1}), two_element({1, 1}),
                                      powerset(2, {1, 2}), powerset(3, {7, 0, 5})};
  AlgebraTables broken = powerset(2, {1, 2});
  broken.diamond[0] = 3;  // violates normality at bottom
  cases.push_back(broken);
  AlgebraTables nonBool = powerset(2, {1, 2});
  nonBool.neg[1] = 1;  // not a complement
  cases.push_back(nonBool);
  for (const auto& c : cases) {
    AlgebraReport s = validate_modal_algebra(c);
    AlgebraReport p = validate_modal_algebra_parallel(c);
    CHECK(s.ok == p.ok);
    CHECK(s.violation == p.violation);
  }
}

TEST_CASE("degenerate single-element tables are rejected") {
  AlgebraTables t;
  t.carrier = {"x"};
  t.join = {{0}};
  t.meet = {{0}};
  t.neg = {0};
  t.bot = 0;
  t.top = 0;
  t.diamond = {0};
  CHECK_FALSE(validate_modal_algebra(t).ok);
}

TEST_CASE("complex algebras of tiny frames") {
  ModalAlgebra a = complex_algebra(KripkeFrame({"w"}, std::vector<uint64_t>{0}));
  CHECK(a.size() == 2);
  CHECK(a.dia(1) == 0);

  ModalAlgebra b = complex_algebra(KripkeFrame({"w"}, std::vector<uint64_t>{1}));
  CHECK(b.dia(1) == 1);
  CHECK(b.dia(0) == 0);

  ModalAlgebra c = complex_algebra(k2());
  CHECK(c.size() == 4);
  CHECK(c.dia(0b10) == 0b01);  // who sees {w1}
  CHECK(c.dia(0b01) == 0);

  CHECK_THROWS_AS(complex_algebra(k2(), 1), SemanticError);
}

TEST_CASE("every finite Boolean algebra splits into atom ultrafilters") {
  CHECK(ultrafilters(ModalAlgebra::from_tables(two_element({0, 1}))).size() == 1);
  CHECK(ultrafilters(ModalAlgebra::from_tables(powerset(2, {1, 2}))).size() == 2);
  CHECK(ultrafilters(ModalAlgebra::from_tables(powerset(3, {1, 2, 4}))).size() == 3);

  // ultrafilter laws, checked directly
  ModalAlgebra a = ModalAlgebra::from_tables(powerset(3, {7, 7, 7}));
  for (const Ultrafilter& u : ultrafilters(a)) {
    for (int e = 0; e < static_cast<int>(a.size()); ++e) {
      bool inU = std::find(u.elements.begin(), u.elements.end(), e) != u.elements.end();
      bool negInU =
          std::find(u.elements.begin(), u.elements.end(), a.neg(e)) != u.elements.end();
      REQUIRE(inU != negInU);
    }
  }
}

TEST_CASE("ultrafilter frames recover the original frame shape") {
  // identity diamond on two atoms: points only see themselves
  GeneralFrame idf = ultrafilter_frame(ModalAlgebra::from_tables(powerset(2, {1, 2})));
  CHECK(idf.frame.size() == 2);
  CHECK(idf.frame.succ() == std::vector<uint64_t>{0b01, 0b10});
  CHECK(idf.family.materialize(2).size() == 4);

  // diamond collapsing top to bottom: no relations survive
  GeneralFrame empty = ultrafilter_frame(ModalAlgebra::from_tables(two_element({0, 0})));
  CHECK(empty.frame.size() == 1);
  CHECK(empty.frame.succ() == std::vector<uint64_t>{0});

  // complex algebra of the one-edge frame round-trips to the same succ masks
  GeneralFrame rt = ultrafilter_frame(complex_algebra(k2()));
  CHECK(rt.frame.succ() == std::vector<uint64_t>{0b10, 0b00});
}

TEST_CASE("the canonical map is an isomorphism onto the double dual") {
  CHECK(jt_iso_check(ModalAlgebra::from_tables(two_element({0, 1}))).ok);
  CHECK(jt_iso_check(complex_algebra(k2())).ok);

  // every normal diamond on the 2-atom powerset is determined by its atom
  // images; all sixteen pass
  for (int da = 0; da < 4; ++da)
    for (int db = 0; db < 4; ++db) {
      IsoCheck iso = jt_iso_check(ModalAlgebra::from_tables(powerset(2, {da, db})));
      REQUIRE(iso.ok);
      REQUIRE(iso.map.size() == 4);
    }
}

TEST_CASE("descriptive frame conditions") {
  DescriptiveReport full = is_descriptive({k2(), AdmissibleFamily::full_family()});
  CHECK(full.differentiated);
  CHECK(full.tight);
  CHECK(full.compact);

  KripkeFrame bare({"w0", "w1"}, std::vector<uint64_t>{0, 0});
  DescriptiveReport coarse =
      is_descriptive({bare, AdmissibleFamily::explicit_family({0b00, 0b11})});
  CHECK_FALSE(coarse.differentiated);

  for (int da = 0; da < 4; ++da) {
    DescriptiveReport rep =
        is_descriptive(ultrafilter_frame(ModalAlgebra::from_tables(powerset(2, {da, 2}))));
    REQUIRE(rep.differentiated);
    REQUIRE(rep.tight);
    REQUIRE(rep.compact);
  }
}

TEST_CASE("tightness fails when no admissible set witnesses a non-edge") {
  // w0 -/-> w0, but every admissible set containing w0 also puts w0 in its
  // diamond image... build: w0 -> w1 -> w0 with family {∅, all}:
  // ◊all = all, so the non-edge (w0,w0) has no witness S with w0 ∈ S,
  // w0 ∉ ◊S among {∅, all}.
  KripkeFrame cyc({"w0", "w1"}, {{"w0", "w1"}, {"w1", "w0"}});
  DescriptiveReport rep = is_descriptive({cyc, AdmissibleFamily::explicit_family({0b00, 0b11})});
  CHECK_FALSE(rep.tight);
}

TEST_CASE("algebraic mu agrees with frame iteration") {
  ModalAlgebra two = ModalAlgebra::from_tables(two_element({0, 1}));
  CHECK(algebraic_mu(two, parse(Language::Modal, "mu X. X"), {}) == 0);

  KripkeFrame chain({"0", "1", "2"}, {{"1", "0"}, {"2", "1"}});
  ModalAlgebra ca = complex_algebra(chain);
  Formula f = parse(Language::Modal, "mu X. (p | <>X)");
  CHECK(algebraic_mu(ca, f, {{"p", 0b001}}) == 0b111);
  CHECK(algebraic_mu(ca, parse(Language::Modal, "mu X. p"), {{"p", 0b010}}) == 0b010);

  // exhaustive agreement with lfp_standard on all 2-world frames
  FormulaGrammar g;
  g.atoms = {prop("p"), fixvar("X")};
  g.wrappers = {[](const Formula& x) { return diamond(x); },
                [](const Formula& x) { return box(x); }};
  std::vector<Formula> bodies = g.up_to_depth(1);
  for (uint32_t bits = 0; bits < 16; ++bits) {
    KripkeFrame fr({"w0", "w1"}, std::vector<uint64_t>{bits & 3u, (bits >> 2) & 3u});
    ModalAlgebra alg = complex_algebra(fr);
    ModalModel model({fr, AdmissibleFamily::full_family()}, {{"p", 0b01}});
    for (const Formula& body : bodies) {
      if (!is_positive_in(body, "X")) continue;
      Formula muf = mu("X", body);
      uint64_t viaFrame = extension(model, muf, Semantics::Standard);
      int viaAlgebra = algebraic_mu(alg, muf, {{"p", 0b01}});
      REQUIRE(static_cast<uint64_t>(viaAlgebra) == viaFrame);
    }
  }
}
