#include "genmodels/fixpoint.hpp"

#include <algorithm>
#include <queue>

#include "genmodels/errors.hpp"

namespace genmodels {

int BinaryRelation::index_of(const std::string& u) const {
  for (size_t i = 0; i < universe.size(); ++i)
    if (universe[i] == u) return static_cast<int>(i);
  return -1;
}

void BinaryRelation::check_invariants() const {
  for (const auto& [a, b] : pairs)
    if (a < 0 || a >= static_cast<int>(universe.size()) || b < 0 ||
        b >= static_cast<int>(universe.size()))
      throw SemanticError(SemanticError::Code::InvalidModel, "pair outside the universe");
}

KtResult kt_lfp(int universeSize,
                const std::function<std::set<int>(const std::set<int>&)>& op) {
  std::set<int> cur;
  for (int step = 0; step <= universeSize + 1; ++step) {
    std::set<int> next = op(cur);
    for (int v : next)
      if (v < 0 || v >= universeSize)
        throw SemanticError(SemanticError::Code::InvalidModel,
                            "operator left the declared universe");
    if (!std::includes(next.begin(), next.end(), cur.begin(), cur.end()))
      throw SemanticError(SemanticError::Code::NonMonotoneDetected,
                          "iteration shrank: the operator is not monotone");
    if (next == cur) return {cur, step};
    cur = std::move(next);
  }
  throw SemanticError(SemanticError::Code::NonMonotoneDetected,
                      "iteration failed to close within |universe|+1 steps");
}

BinaryRelation transitive_closure_fp(const BinaryRelation& r) {
  r.check_invariants();
  int n = static_cast<int>(r.universe.size());
  auto encode = [n](int a, int b) { return a * n + b; };
  auto op = [&](const std::set<int>& x) {
    std::set<int> out;
    for (const auto& [a, b] : r.pairs) out.insert(encode(a, b));
    for (int code : x) {
      int a = code / n, z = code % n;
      for (const auto& [z2, b] : r.pairs)
        if (z2 == z) out.insert(encode(a, b));
    }
    return out;
  };
  KtResult kt = kt_lfp(n * n, op);
  BinaryRelation out;
  out.universe = r.universe;
  for (int code : kt.value) out.pairs.insert({code / n, code % n});
  return out;
}

bool path_oracle(const BinaryRelation& r, int x, int y) {
  r.check_invariants();
  int n = static_cast<int>(r.universe.size());
  if (x < 0 || x >= n || y < 0 || y >= n)
    throw SemanticError(SemanticError::Code::InvalidModel, "endpoint outside the universe");
  std::vector<std::vector<int>> succ(n);
  for (const auto& [a, b] : r.pairs) succ[a].push_back(b);
  std::vector<char> seen(n, 0);
  std::queue<int> frontier;
  for (int b : succ[x]) {  // paths need at least one edge
    if (b == y) return true;
    if (!seen[b]) {
      seen[b] = 1;
      frontier.push(b);
    }
  }
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop();
    for (int b : succ[cur]) {
      if (b == y) return true;
      if (!seen[b]) {
        seen[b] = 1;
        frontier.push(b);
      }
    }
  }
  return false;
}

}  // namespace genmodels
