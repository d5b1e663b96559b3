#include "genmodels/generate.hpp"

#include <random>

namespace genmodels {

std::vector<Formula> FormulaGrammar::up_to_depth(int depth) const {
  std::vector<std::vector<Formula>> levels;  // levels[k] = trees of depth exactly k
  levels.push_back(atoms);
  std::vector<Formula> all = atoms;
  for (int k = 1; k <= depth; ++k) {
    std::vector<Formula> fresh;
    const std::vector<Formula>& deepest = levels[k - 1];
    for (const Formula& f : deepest) {
      fresh.push_back(neg(f));
      for (const auto& wrap : wrappers) fresh.push_back(wrap(f));
    }
    std::vector<Formula> shallower;  // depth <= k-2
    for (int j = 0; j + 1 < k; ++j)
      shallower.insert(shallower.end(), levels[j].begin(), levels[j].end());
    auto binary = [&](const Formula& a, const Formula& b) {
      fresh.push_back(conj(a, b));
      fresh.push_back(disj(a, b));
      fresh.push_back(impl(a, b));
    };
    // a binary tree has depth k iff its deeper operand has depth k-1
    for (const Formula& f : deepest)
      for (const Formula& g : deepest) binary(f, g);
    for (const Formula& f : deepest)
      for (const Formula& g : shallower) {
        binary(f, g);
        binary(g, f);
      }
    all.insert(all.end(), fresh.begin(), fresh.end());
    levels.push_back(std::move(fresh));
  }
  return all;
}

std::vector<Formula> FormulaGrammar::samples(int count, int depth, uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pickAtom(0, atoms.size() - 1);
  std::uniform_int_distribution<size_t> pickOp(0, wrappers.size() + 3);
  std::function<Formula(int)> gen = [&](int d) -> Formula {
    if (d == 0) return atoms[pickAtom(rng)];
    size_t op = pickOp(rng);
    if (op == 0) return neg(gen(d - 1));
    if (op <= wrappers.size()) return wrappers[op - 1](gen(d - 1));
    Formula deep = gen(d - 1);
    Formula other = gen(std::uniform_int_distribution<int>(0, d - 1)(rng));
    switch (op - wrappers.size()) {
      case 1:
        return conj(deep, other);
      case 2:
        return disj(other, deep);
      default:
        return impl(deep, other);
    }
  };
  std::vector<Formula> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(gen(depth));
  return out;
}

}  // namespace genmodels
