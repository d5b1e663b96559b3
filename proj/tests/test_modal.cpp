#include <doctest.h>

#include <cstdint>
#include <vector>

#include "genmodels/cofinite.hpp"
#include "genmodels/errors.hpp"
#include "genmodels/kripke.hpp"
#include "genmodels/modal_model.hpp"
#include "genmodels/parser.hpp"

using namespace genmodels;

namespace {

KripkeFrame k2() { return KripkeFrame({"w0", "w1"}, {{"w0", "w1"}}); }

KripkeFrame chain3() {
  // 2 -> 1 -> 0
  return KripkeFrame({"0", "1", "2"}, {{"1", "0"}, {"2", "1"}});
}

}  // namespace

TEST_CASE("diamond image is the existential preimage") {
  KripkeFrame f = k2();
  CHECK(f.diamond(0b10) == 0b01);  // only w0 sees w1
  CHECK(f.diamond(0) == 0);
  CHECK(f.diamond(0b01) == 0);  // nothing sees w0
}

TEST_CASE("diamond is normal on all small frames") {
  for (uint32_t bits = 0; bits < 512; ++bits) {
    KripkeFrame f({"a", "b", "c"},
                  std::vector<uint64_t>{bits & 7u, (bits >> 3) & 7u, (bits >> 6) & 7u});
    CHECK(f.diamond(0) == 0);
    for (uint64_t s = 0; s < 8; ++s)
      for (uint64_t t = 0; t < 8; ++t)
        REQUIRE(f.diamond(s | t) == (f.diamond(s) | f.diamond(t)));
  }
}

TEST_CASE("family closure validation") {
  KripkeFrame two({"w0", "w1"}, std::vector<uint64_t>{0, 0});
  CHECK(validate_general_frame({two, AdmissibleFamily::explicit_family({0b00, 0b11})}).ok());

  FrameReport bad =
      validate_general_frame({two, AdmissibleFamily::explicit_family({0b00, 0b10, 0b11})});
  CHECK_FALSE(bad.ok());
  bool complementMissing = false;
  for (const auto& v : bad.violations)
    if (v.rule == ClosureViolation::Rule::Complement && v.missing == 0b01)
      complementMissing = true;
  CHECK(complementMissing);

  CHECK(validate_general_frame(
            {k2(), AdmissibleFamily::explicit_family({0b00, 0b01, 0b10, 0b11})})
            .ok());
}

TEST_CASE("diamond closure violations are reported") {
  // cycle w0 <-> w1; family misses the diamond image of {w0}
  KripkeFrame cyc({"w0", "w1"}, {{"w0", "w1"}, {"w1", "w0"}});
  // {∅, {w0,w1}} is closed: ◊(all) = all
  CHECK(validate_general_frame({cyc, AdmissibleFamily::explicit_family({0b00, 0b11})}).ok());
  // three-world frame where ◊{a} = {b} but {b} is absent
  KripkeFrame f({"a", "b", "c"}, {{"b", "a"}});
  FrameReport rep = validate_general_frame(
      {f, AdmissibleFamily::explicit_family({0b000, 0b001, 0b110, 0b111})});
  CHECK_FALSE(rep.ok());
  bool diamondMissing = false;
  for (const auto& v : rep.violations)
    if (v.rule == ClosureViolation::Rule::Diamond) diamondMissing = true;
  CHECK(diamondMissing);
}

TEST_CASE("modal evaluation on finite models") {
  ModalModel m({k2(), AdmissibleFamily::full_family()}, {{"p", 0b10}});
  Formula f = parse(Language::Modal, "<>p");
  CHECK(extension(m, f, Semantics::Standard) == 0b01);
  CHECK(extension(m, f, Semantics::General) == 0b01);

  ModalModel chain({chain3(), AdmissibleFamily::full_family()}, {{"p", 0b001}});
  Formula g = parse(Language::Modal, "mu X. (p | <>X)");
  CHECK(extension(chain, g, Semantics::Standard) == 0b111);
  CHECK(extension(chain, g, Semantics::General) == 0b111);
}

TEST_CASE("valuations must be admissible") {
  CHECK_THROWS_AS(
      ModalModel({k2(), AdmissibleFamily::explicit_family({0b00, 0b11})}, {{"p", 0b10}}),
      SemanticError);
}

TEST_CASE("standard lfp is the least pre-fixed point") {
  for (uint32_t bits = 0; bits < 512; ++bits) {
    KripkeFrame f({"a", "b", "c"},
                  std::vector<uint64_t>{bits & 7u, (bits >> 3) & 7u, (bits >> 6) & 7u});
    auto op = [&](uint64_t s) { return uint64_t{0b001} | f.diamond(s); };
    LfpResult r = lfp_standard(f, op);
    REQUIRE(op(r.value) == r.value);
    REQUIRE(r.iterations <= 4);
    for (uint64_t p = 0; p < 8; ++p)
      if ((op(p) | p) == p) REQUIRE((r.value & p) == r.value);
  }
}

TEST_CASE("identity operator has empty least fixed point") {
  LfpResult r = lfp_standard(chain3(), [](uint64_t s) { return s; });
  CHECK(r.value == 0);
}

TEST_CASE("general lfp contains the standard one and matches on full families") {
  for (uint32_t bits = 0; bits < 512; ++bits) {
    KripkeFrame f({"a", "b", "c"},
                  std::vector<uint64_t>{bits & 7u, (bits >> 3) & 7u, (bits >> 6) & 7u});
    auto op = [&](uint64_t s) { return uint64_t{0b001} | f.diamond(s); };
    uint64_t standard = lfp_standard(f, op).value;
    uint64_t general = lfp_general({f, AdmissibleFamily::full_family()}, op).value;
    REQUIRE(standard == general);
  }

  // family {∅, all}: ∅ is pre-fixed for the bare diamond operator
  KripkeFrame f = k2();
  GeneralFrame gf{f, AdmissibleFamily::explicit_family({0b00, 0b11})};
  LfpResult r = lfp_general(gf, [&](uint64_t s) { return f.diamond(s); });
  CHECK(r.value == 0);
}

TEST_CASE("a coarse family can strictly enlarge the least fixed point") {
  // no edges, family {∅, all}: op(S) = {w0} has least pre-fixed point {w0}
  // in the full powerset, but the only admissible pre-fixed point is all.
  KripkeFrame bare({"w0", "w1"}, std::vector<uint64_t>{0, 0});
  auto op = [](uint64_t) { return uint64_t{0b01}; };
  CHECK(lfp_standard(bare, op).value == 0b01);
  GeneralFrame gf{bare, AdmissibleFamily::explicit_family({0b00, 0b11})};
  CHECK(lfp_general(gf, op).value == 0b11);
}

TEST_CASE("non-intersection-closed families can leave the least point inadmissible") {
  // {a,b} and {a,c} are both pre-fixed for the constant-{a} operator, but
  // their intersection {a} is not in the family. Such a family never passes
  // validation; lfp_general still defends against it.
  KripkeFrame f({"a", "b", "c"}, std::vector<uint64_t>{0, 0, 0});
  GeneralFrame gf{f, AdmissibleFamily::explicit_family({0b011, 0b101})};
  auto op = [](uint64_t) { return uint64_t{0b001}; };
  CHECK_THROWS_AS(lfp_general(gf, op), SemanticError);
}

TEST_CASE("general mu on a validated cycle model") {
  KripkeFrame cyc({"w0", "w1"}, {{"w0", "w1"}, {"w1", "w0"}});
  GeneralFrame tiny{cyc, AdmissibleFamily::explicit_family({0b00, 0b11})};
  REQUIRE(validate_general_frame(tiny).ok());
  ModalModel m(tiny, {});
  CHECK(extension(m, parse(Language::Modal, "mu X. <>X"), Semantics::General) == 0);
}

TEST_CASE("nu is the complement dual of mu") {
  ModalModel m({k2(), AdmissibleFamily::full_family()}, {{"p", 0b10}});
  // nu X. (p & []X): greatest set of worlds all of whose paths stay in p.
  // w1 has no successors, so []X holds there; w1 ∈ p.
  uint64_t v = extension(m, parse(Language::Modal, "nu X. (p & []X)"), Semantics::Standard);
  CHECK(v == 0b10);
  // reflexive loop breaks it
  KripkeFrame loop({"w0", "w1"}, {{"w0", "w1"}, {"w1", "w1"}});
  ModalModel m2({loop, AdmissibleFamily::full_family()}, {{"p", 0b10}});
  CHECK(extension(m2, parse(Language::Modal, "nu X. (p & []X)"), Semantics::Standard) == 0b10);
  ModalModel m3({loop, AdmissibleFamily::full_family()}, {{"p", 0b01}});
  CHECK(extension(m3, parse(Language::Modal, "nu X. (p & []X)"), Semantics::Standard) == 0);
}

TEST_CASE("mu-free extensions stay inside a closed family") {
  KripkeFrame f = k2();
  std::vector<uint64_t> family{0b00, 0b01, 0b10, 0b11};
  ModalModel m({f, AdmissibleFamily::explicit_family(family)}, {{"p", 0b10}});
  for (const char* text : {"p", "~p", "<>p", "[]p", "p & <>p", "p | []~p", "<><>p"}) {
    uint64_t v = extension(m, parse(Language::Modal, text), Semantics::General);
    bool inFamily = false;
    for (uint64_t s : family) inFamily = inFamily || s == v;
    CHECK(inFamily);
  }
}

TEST_CASE("finite or cofinite sets form a closed algebra") {
  CofinSet a = CofinSet::finite({0, 2, 4});
  CofinSet b = CofinSet::cofinite({1, 2});

  CHECK(a.complement().is_cofinite());
  CHECK(a.complement().complement() == a);
  CHECK(b.complement() == CofinSet::finite({1, 2}));

  CHECK(set_union(a, b) == CofinSet::cofinite({1}));
  CHECK(set_intersection(a, b) == CofinSet::finite({0, 4}));

  // De Morgan
  CHECK(set_union(a, b).complement() ==
        set_intersection(a.complement(), b.complement()));
  CHECK(set_intersection(a, b).complement() ==
        set_union(a.complement(), b.complement()));

  CHECK(a.subset_of(CofinSet::cofinite({})));
  CHECK_FALSE(b.subset_of(a));
  CHECK(CofinSet::empty().subset_of(a));

  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(1));
  CHECK(b.contains(0));
  CHECK_FALSE(b.contains(2));
  CHECK(b.contains_infinity());
  CHECK_FALSE(a.contains_infinity());
}

TEST_CASE("symbolic diamond walks the chain backwards") {
  // n sees n-1 along n+1 -> n, and the infinity point sees itself
  CHECK(fig1_diamond(CofinSet::finite({0})) == CofinSet::finite({1}));
  CHECK(fig1_diamond(CofinSet::finite({3, 7})) == CofinSet::finite({4, 8}));
  CHECK(fig1_diamond(CofinSet::empty()) == CofinSet::empty());
  // a cofinite set containing infinity: predecessors shift, infinity stays
  CofinSet c = fig1_diamond(CofinSet::cofinite({0, 5}));
  CHECK(c.is_cofinite());
  CHECK(c.contains_infinity());
  CHECK_FALSE(c.contains(6));
  CHECK(c.contains(5));
  CHECK_FALSE(c.contains(0));  // 0 has no predecessor in the image
}

TEST_CASE("symbolic standard iteration diverges through finite prefixes") {
  auto op = [](const CofinSet& s) {
    return set_union(CofinSet::finite({0}), fig1_diamond(s));
  };
  SymbolicLfpResult r = fig1_lfp_standard(op, 24);
  CHECK_FALSE(r.converged);
  CHECK(r.prefix == CofinSet::finite({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12,
                                      13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23}));
  CHECK(r.iterations == 24);
}

TEST_CASE("symbolic general lfp finds the full cofinite set") {
  auto op = [](const CofinSet& s) {
    return set_union(CofinSet::finite({0}), fig1_diamond(s));
  };
  CofinSet v = fig1_lfp_general(op, 64);
  CHECK(v == CofinSet::universe());
  CHECK(v.to_string() == "N ∪ {∞}");
}

TEST_CASE("symbolic model evaluation") {
  Fig1Model m;
  m.valuation["p"] = CofinSet::finite({0});
  CHECK(extension(m, parse(Language::Modal, "<>p"), Semantics::Standard) ==
        CofinSet::finite({1}));
  CHECK(extension(m, parse(Language::Modal, "mu X. (p | <>X)"), Semantics::General) ==
        CofinSet::universe());
  CHECK_THROWS_AS(extension(m, parse(Language::Modal, "mu X. (p | <>X)"), Semantics::Standard),
                  SemanticError);
  try {
    extension(m, parse(Language::Modal, "mu X. (p | <>X)"), Semantics::Standard);
  } catch (const SemanticError& e) {
    CHECK(e.code() == SemanticError::Code::DivergentLfp);
  }
}

TEST_CASE("monotone convergent symbolic iterations do converge") {
  Fig1Model m;
  m.valuation["p"] = CofinSet::cofinite({});
  // mu X. p converges to p in one productive step
  CHECK(extension(m, parse(Language::Modal, "mu X. p"), Semantics::Standard) ==
        CofinSet::universe());
}
