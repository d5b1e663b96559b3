#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "genmodels/errors.hpp"
#include "genmodels/fixpoint.hpp"

using namespace genmodels;

namespace {

BinaryRelation rel(std::vector<std::string> universe, std::set<std::pair<int, int>> pairs) {
  BinaryRelation r;
  r.universe = std::move(universe);
  r.pairs = std::move(pairs);
  return r;
}

std::set<std::pair<int, int>> oracle_closure(const BinaryRelation& r) {
  std::set<std::pair<int, int>> out;
  int n = static_cast<int>(r.universe.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (path_oracle(r, x, y)) out.insert({x, y});
  return out;
}

}  // namespace

TEST_CASE("generic iteration over subset lattices") {
  KtResult idr = kt_lfp(3, [](const std::set<int>& s) { return s; });
  CHECK(idr.value.empty());

  KtResult constant = kt_lfp(3, [](const std::set<int>&) {
    return std::set<int>{0, 1, 2};
  });
  CHECK(constant.value == std::set<int>{0, 1, 2});
  CHECK(constant.iterations <= 2);

  // chain collector: 0 always, n+1 whenever n present
  KtResult chain = kt_lfp(4, [](const std::set<int>& s) {
    std::set<int> out{0};
    for (int x : s)
      if (x + 1 < 4) out.insert(x + 1);
    return out;
  });
  CHECK(chain.value == std::set<int>{0, 1, 2, 3});
  CHECK(chain.iterations <= 5);
}

TEST_CASE("shrinking operators are rejected") {
  auto shrink = [](const std::set<int>& s) {
    return s.empty() ? std::set<int>{0, 1} : std::set<int>{};
  };
  CHECK_THROWS_AS(kt_lfp(2, shrink), SemanticError);
}

TEST_CASE("transitive closure via the relational functional") {
  BinaryRelation r = rel({"1", "2", "3"}, {{0, 1}, {1, 2}});
  BinaryRelation c = transitive_closure_fp(r);
  CHECK(c.pairs == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});

  CHECK(transitive_closure_fp(rel({"1", "2"}, {})).pairs.empty());

  BinaryRelation loop = rel({"1"}, {{0, 0}});
  CHECK(transitive_closure_fp(loop).pairs == std::set<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("path search needs at least one edge") {
  BinaryRelation r = rel({"1", "2", "3"}, {{0, 1}, {1, 2}});
  CHECK(path_oracle(r, 0, 2));
  CHECK_FALSE(path_oracle(rel({"1", "2"}, {{0, 1}}), 1, 0));
  // no loop reachable from 0, so no path 0 -> 0
  CHECK_FALSE(path_oracle(r, 0, 0));
  BinaryRelation cyc = rel({"1", "2"}, {{0, 1}, {1, 0}});
  CHECK(path_oracle(cyc, 0, 0));
}

TEST_CASE("closure agrees with path search on all tiny digraphs") {
  // every digraph on up to 3 nodes
  for (int n = 1; n <= 3; ++n) {
    int cells = n * n;
    for (uint32_t bits = 0; bits < (1u << cells); ++bits) {
      BinaryRelation r;
      for (int i = 0; i < n; ++i) r.universe.push_back(std::to_string(i));
      for (int c = 0; c < cells; ++c)
        if ((bits >> c) & 1) r.pairs.insert({c / n, c % n});
      REQUIRE(transitive_closure_fp(r).pairs == oracle_closure(r));
    }
  }
}

TEST_CASE("closure agrees with path search on random digraphs") {
  std::mt19937_64 rng(7041);
  std::uniform_int_distribution<int> size(4, 8);
  std::bernoulli_distribution edge(0.3);
  for (int trial = 0; trial < 200; ++trial) {
    int n = size(rng);
    BinaryRelation r;
    for (int i = 0; i < n; ++i) r.universe.push_back(std::to_string(i));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (edge(rng)) r.pairs.insert({x, y});
    BinaryRelation c = transitive_closure_fp(r);
    REQUIRE(c.pairs == oracle_closure(r));
    // result is transitive and contains the base relation
    for (const auto& [x, y] : r.pairs) REQUIRE(c.pairs.count({x, y}));
    for (const auto& [x, y] : c.pairs)
      for (const auto& [y2, z] : c.pairs)
        if (y == y2) REQUIRE(c.pairs.count({x, z}));
  }
}

TEST_CASE("closure is least among transitive supersets") {
  for (int n = 1; n <= 3; ++n) {
    int cells = n * n;
    for (uint32_t bits = 0; bits < (1u << cells); ++bits) {
      BinaryRelation r;
      for (int i = 0; i < n; ++i) r.universe.push_back(std::to_string(i));
      for (int c = 0; c < cells; ++c)
        if ((bits >> c) & 1) r.pairs.insert({c / n, c % n});
      std::set<std::pair<int, int>> closed = transitive_closure_fp(r).pairs;
      // any transitive superset of r contains the closure
      for (uint32_t cand = 0; cand < (1u << cells); ++cand) {
        if ((cand & bits) != bits) continue;
        std::set<std::pair<int, int>> t;
        for (int c = 0; c < cells; ++c)
          if ((cand >> c) & 1) t.insert({c / n, c % n});
        bool transitive = true;
        for (const auto& [x, y] : t)
          for (const auto& [y2, z] : t)
            if (y == y2 && !t.count({x, z})) transitive = false;
        if (!transitive) continue;
        for (const auto& p : closed) REQUIRE(t.count(p));
      }
    }
  }
}

TEST_CASE("relation invariants") {
  BinaryRelation bad;
  bad.universe = {"1"};
  bad.pairs = {{0, 1}};
  CHECK_THROWS_AS(bad.check_invariants(), SemanticError);
  CHECK(rel({"1", "2"}, {{0, 1}}).index_of("2") == 1);
}
