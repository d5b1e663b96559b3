#include "genmodels/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "genmodels/errors.hpp"

namespace genmodels {

namespace {

void check_shapes(const AlgebraTables& t) {
  size_t n = t.carrier.size();
  auto bad = [](const std::string& what) {
    throw SemanticError(SemanticError::Code::InvalidAlgebra, "malformed algebra tables: " + what);
  };
  if (n == 0) bad("empty carrier");
  auto checkUnary = [&](const std::vector<int>& u, const std::string& name) {
    if (u.size() != n) bad(name + " table size");
    for (int v : u)
      if (v < 0 || v >= static_cast<int>(n)) bad(name + " entry out of range");
  };
  auto checkBinary = [&](const std::vector<std::vector<int>>& b, const std::string& name) {
    if (b.size() != n) bad(name + " table size");
    for (const auto& row : b) {
      if (row.size() != n) bad(name + " row size");
      for (int v : row)
        if (v < 0 || v >= static_cast<int>(n)) bad(name + " entry out of range");
    }
  };
  checkBinary(t.join, "join");
  checkBinary(t.meet, "meet");
  checkUnary(t.neg, "neg");
  checkUnary(t.diamond, "diamond");
  if (t.bot < 0 || t.bot >= static_cast<int>(n)) bad("bot out of range");
  if (t.top < 0 || t.top >= static_cast<int>(n)) bad("top out of range");
}

// Axioms in a fixed order; `index` walks a flattened witness space so the
// serial and parallel validators agree on which violation is "first".
struct AxiomCheck {
  const AlgebraTables& t;
  int n;

  explicit AxiomCheck(const AlgebraTables& tables)
      : t(tables), n(static_cast<int>(tables.carrier.size())) {}

  long long unary_count() const { return n; }
  long long pair_count() const { return static_cast<long long>(n) * n; }
  long long triple_count() const { return static_cast<long long>(n) * n * n; }

  // Total witness space: triples for associativity/distributivity, pairs for
  // the rest, plus the constant checks.
  long long total() const { return 3 * triple_count() + 5 * pair_count() + 3 * unary_count() + 2; }

  std::string describe(int x, int y, int z, const std::string& law) const {
    std::ostringstream os;
    os << law << " fails at (" << t.carrier[x];
    if (y >= 0) os << ", " << t.carrier[y];
    if (z >= 0) os << ", " << t.carrier[z];
    os << ")";
    return os.str();
  }

  // Returns empty when the witness at flat position `idx` checks out.
  std::string check(long long idx) const {
    long long trip = triple_count(), pair = pair_count();
    if (idx < trip) {
      auto [x, y, z] = split3(idx);
      if (t.join[t.join[x][y]][z] != t.join[x][t.join[y][z]])
        return describe(x, y, z, "join associativity");
      return {};
    }
    idx -= trip;
    if (idx < trip) {
      auto [x, y, z] = split3(idx);
      if (t.meet[t.meet[x][y]][z] != t.meet[x][t.meet[y][z]])
        return describe(x, y, z, "meet associativity");
      return {};
    }
    idx -= trip;
    if (idx < trip) {
      auto [x, y, z] = split3(idx);
      if (t.meet[x][t.join[y][z]] != t.join[t.meet[x][y]][t.meet[x][z]])
        return describe(x, y, z, "distributivity of meet over join");
      return {};
    }
    idx -= trip;
    if (idx < pair) {
      auto [x, y] = split2(idx);
      if (t.join[x][y] != t.join[y][x]) return describe(x, y, -1, "join commutativity");
      return {};
    }
    idx -= pair;
    if (idx < pair) {
      auto [x, y] = split2(idx);
      if (t.meet[x][y] != t.meet[y][x]) return describe(x, y, -1, "meet commutativity");
      return {};
    }
    idx -= pair;
    if (idx < pair) {
      auto [x, y] = split2(idx);
      if (t.join[x][t.meet[x][y]] != x) return describe(x, y, -1, "absorption (join over meet)");
      return {};
    }
    idx -= pair;
    if (idx < pair) {
      auto [x, y] = split2(idx);
      if (t.meet[x][t.join[x][y]] != x) return describe(x, y, -1, "absorption (meet over join)");
      return {};
    }
    idx -= pair;
    if (idx < pair) {
      auto [x, y] = split2(idx);
      if (t.diamond[t.join[x][y]] != t.join[t.diamond[x]][t.diamond[y]])
        return describe(x, y, -1, "diamond additivity");
      return {};
    }
    idx -= pair;
    if (idx < n) {
      int x = static_cast<int>(idx);
      if (t.join[x][t.bot] != x) return describe(x, -1, -1, "bottom identity");
      return {};
    }
    idx -= n;
    if (idx < n) {
      int x = static_cast<int>(idx);
      if (t.meet[x][t.top] != x) return describe(x, -1, -1, "top identity");
      return {};
    }
    idx -= n;
    if (idx < n) {
      int x = static_cast<int>(idx);
      if (t.join[x][t.neg[x]] != t.top) return describe(x, -1, -1, "complement join");
      if (t.meet[x][t.neg[x]] != t.bot) return describe(x, -1, -1, "complement meet");
      return {};
    }
    idx -= n;
    if (idx == 0) {
      if (t.diamond[t.bot] != t.bot) return "diamond normality fails: diamond(bot) != bot";
      return {};
    }
    if (t.bot == t.top && n > 0) return "degenerate algebra: bot equals top";
    return {};
  }

private:
  std::tuple<int, int, int> split3(long long idx) const {
    int z = static_cast<int>(idx % n);
    idx /= n;
    int y = static_cast<int>(idx % n);
    int x = static_cast<int>(idx / n);
    return {x, y, z};
  }
  std::pair<int, int> split2(long long idx) const {
    return {static_cast<int>(idx / n), static_cast<int>(idx % n)};
  }
};

}  // namespace

AlgebraReport validate_modal_algebra(const AlgebraTables& t) {
  check_shapes(t);
  AxiomCheck ax(t);
  long long total = ax.total();
  for (long long i = 0; i < total; ++i) {
    std::string v = ax.check(i);
    if (!v.empty()) return {false, v};
  }
  return {};
}

AlgebraReport validate_modal_algebra_parallel(const AlgebraTables& t) {
  check_shapes(t);
  AxiomCheck ax(t);
  long long total = ax.total();
  long long firstBad = total;
  std::string firstMsg;
#pragma omp parallel
  {
    long long localBad = total;
    std::string localMsg;
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < total; ++i) {
      if (i >= localBad) continue;
      std::string v = ax.check(i);
      if (!v.empty() && i < localBad) {
        localBad = i;
        localMsg = std::move(v);
      }
    }
#pragma omp critical
    {
      if (localBad < firstBad) {
        firstBad = localBad;
        firstMsg = std::move(localMsg);
      }
    }
  }
  if (firstBad < total) return {false, firstMsg};
  return {};
}

ModalAlgebra ModalAlgebra::from_tables(AlgebraTables t) {
  AlgebraReport r =
      t.carrier.size() > 128 ? validate_modal_algebra_parallel(t) : validate_modal_algebra(t);
  if (!r.ok) throw SemanticError(SemanticError::Code::InvalidAlgebra, r.violation);
  return ModalAlgebra(std::move(t));
}

ModalAlgebra complex_algebra(const KripkeFrame& frame, size_t maxWorlds) {
  if (frame.size() > maxWorlds)
    throw SemanticError(SemanticError::Code::CapExceeded,
                        "complex algebra cap is " + std::to_string(maxWorlds) + " worlds, got " +
                            std::to_string(frame.size()));
  size_t n = size_t{1} << frame.size();
  AlgebraTables t;
  t.carrier.reserve(n);
  for (size_t m = 0; m < n; ++m) t.carrier.push_back(frame.set_to_string(m));
  t.join.assign(n, std::vector<int>(n));
  t.meet.assign(n, std::vector<int>(n));
  t.neg.resize(n);
  t.diamond.resize(n);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      t.join[a][b] = static_cast<int>(a | b);
      t.meet[a][b] = static_cast<int>(a & b);
    }
    t.neg[a] = static_cast<int>(frame.universe() & ~a);
    t.diamond[a] = static_cast<int>(frame.diamond(a));
  }
  t.bot = 0;
  t.top = static_cast<int>(n - 1);
  return ModalAlgebra::from_tables(std::move(t));
}

ModalAlgebra algebra_of_general_frame(const GeneralFrame& gf) {
  FrameReport report = validate_general_frame(gf);
  if (!report.ok())
    throw SemanticError(SemanticError::Code::ClosureViolation,
                        "family is not closed:\n" + report.to_string(gf.frame));
  std::vector<uint64_t> sets = gf.family.materialize(gf.frame.size());
  size_t n = sets.size();
  auto index_of = [&](uint64_t s) {
    auto it = std::lower_bound(sets.begin(), sets.end(), s);
    return static_cast<int>(it - sets.begin());
  };
  AlgebraTables t;
  t.carrier.reserve(n);
  for (uint64_t s : sets) t.carrier.push_back(gf.frame.set_to_string(s));
  t.join.assign(n, std::vector<int>(n));
  t.meet.assign(n, std::vector<int>(n));
  t.neg.resize(n);
  t.diamond.resize(n);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      t.join[a][b] = index_of(sets[a] | sets[b]);
      t.meet[a][b] = index_of(sets[a] & sets[b]);
    }
    t.neg[a] = index_of(gf.frame.universe() & ~sets[a]);
    t.diamond[a] = index_of(gf.frame.diamond(sets[a]));
  }
  t.bot = index_of(0);
  t.top = index_of(gf.frame.universe());
  return ModalAlgebra::from_tables(std::move(t));
}

std::vector<int> atoms(const ModalAlgebra& a) {
  std::vector<int> out;
  int n = static_cast<int>(a.size());
  for (int x = 0; x < n; ++x) {
    if (x == a.bot()) continue;
    bool minimal = true;
    for (int y = 0; y < n && minimal; ++y)
      if (y != a.bot() && y != x && a.leq(y, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<Ultrafilter> ultrafilters(const ModalAlgebra& a) {
  std::vector<Ultrafilter> out;
  for (int t : atoms(a)) {
    Ultrafilter u;
    u.atom = t;
    for (int b = 0; b < static_cast<int>(a.size()); ++b)
      if (a.leq(t, b)) u.elements.push_back(b);
    out.push_back(std::move(u));
  }
  return out;
}

GeneralFrame ultrafilter_frame(const ModalAlgebra& a) {
  std::vector<Ultrafilter> ufs = ultrafilters(a);
  size_t k = ufs.size();
  if (k == 0)
    throw SemanticError(SemanticError::Code::InvalidAlgebra,
                        "algebra has no atoms, so its ultrafilter frame has no worlds");
  std::vector<std::string> worlds;
  for (size_t i = 0; i < k; ++i) worlds.push_back("u" + std::to_string(i));
  std::vector<char> member(k * a.size(), 0);
  for (size_t i = 0; i < k; ++i)
    for (int b : ufs[i].elements) member[i * a.size() + b] = 1;
  auto in_uf = [&](size_t i, int b) { return member[i * a.size() + b] != 0; };
  std::vector<uint64_t> succ(k, 0);
  for (size_t x = 0; x < k; ++x)
    for (size_t y = 0; y < k; ++y) {
      bool rel = true;
      for (int b = 0; b < static_cast<int>(a.size()) && rel; ++b)
        if (in_uf(y, b) && !in_uf(x, a.dia(b))) rel = false;
      if (rel) succ[x] |= uint64_t{1} << y;
    }
  std::vector<uint64_t> family;
  family.reserve(a.size());
  for (int b = 0; b < static_cast<int>(a.size()); ++b) {
    uint64_t phi = 0;
    for (size_t i = 0; i < k; ++i)
      if (in_uf(i, b)) phi |= uint64_t{1} << i;
    family.push_back(phi);
  }
  return {KripkeFrame(std::move(worlds), std::move(succ)),
          AdmissibleFamily::explicit_family(std::move(family))};
}

IsoCheck jt_iso_check(const ModalAlgebra& a) {
  IsoCheck out;
  GeneralFrame gf = ultrafilter_frame(a);
  ModalAlgebra b = algebra_of_general_frame(gf);
  std::vector<Ultrafilter> ufs = ultrafilters(a);
  size_t k = ufs.size();
  std::vector<char> member(k * a.size(), 0);
  for (size_t i = 0; i < k; ++i)
    for (int e : ufs[i].elements) member[i * a.size() + e] = 1;

  // phi(x) as a mask over ultrafilter order, then locate it in b's carrier
  std::vector<uint64_t> sets = gf.family.sets;
  auto index_in_b = [&](uint64_t mask) {
    auto it = std::lower_bound(sets.begin(), sets.end(), mask);
    if (it == sets.end() || *it != mask) return -1;
    return static_cast<int>(it - sets.begin());
  };
  out.map.resize(a.size());
  for (int x = 0; x < static_cast<int>(a.size()); ++x) {
    uint64_t phi = 0;
    for (size_t i = 0; i < k; ++i)
      if (member[i * a.size() + x]) phi |= uint64_t{1} << i;
    out.map[x] = index_in_b(phi);
    if (out.map[x] < 0) {
      out.ok = false;
      out.detail = "phi(" + a.name(x) + ") is not in the dual carrier";
      return out;
    }
  }
  if (a.size() != b.size()) {
    out.ok = false;
    out.detail = "carrier sizes differ: " + std::to_string(a.size()) + " vs " +
                 std::to_string(b.size());
    return out;
  }
  std::vector<char> hit(b.size(), 0);
  for (int m : out.map) {
    if (hit[m]) {
      out.ok = false;
      out.detail = "phi is not injective";
      return out;
    }
    hit[m] = 1;
  }
  auto fail = [&](const std::string& what, int x, int y) {
    out.ok = false;
    std::ostringstream os;
    os << what << " not preserved at (" << a.name(x);
    if (y >= 0) os << ", " << a.name(y);
    os << ")";
    out.detail = os.str();
  };
  if (out.map[a.bot()] != b.bot()) {
    fail("bottom", a.bot(), -1);
    return out;
  }
  if (out.map[a.top()] != b.top()) {
    fail("top", a.top(), -1);
    return out;
  }
  for (int x = 0; x < static_cast<int>(a.size()); ++x) {
    if (out.map[a.neg(x)] != b.neg(out.map[x])) {
      fail("complement", x, -1);
      return out;
    }
    if (out.map[a.dia(x)] != b.dia(out.map[x])) {
      fail("diamond", x, -1);
      return out;
    }
    for (int y = 0; y < static_cast<int>(a.size()); ++y) {
      if (out.map[a.join(x, y)] != b.join(out.map[x], out.map[y])) {
        fail("join", x, y);
        return out;
      }
      if (out.map[a.meet(x, y)] != b.meet(out.map[x], out.map[y])) {
        fail("meet", x, y);
        return out;
      }
    }
  }
  return out;
}

DescriptiveReport is_descriptive(const GeneralFrame& gf) {
  DescriptiveReport out;
  out.note = "finite frames are compact";
  size_t n = gf.frame.size();
  std::vector<uint64_t> sets = gf.family.materialize(n);
  for (size_t u = 0; u < n && out.differentiated; ++u)
    for (size_t v = 0; v < n && out.differentiated; ++v) {
      if (u == v) continue;
      bool separated = false;
      for (uint64_t s : sets)
        if (((s >> u) & 1) && !((s >> v) & 1)) {
          separated = true;
          break;
        }
      if (!separated) {
        out.differentiated = false;
        out.differentiatedWitness = {static_cast<int>(u), static_cast<int>(v)};
      }
    }
  for (size_t u = 0; u < n && out.tight; ++u)
    for (size_t v = 0; v < n && out.tight; ++v) {
      if (gf.frame.related(static_cast<int>(u), static_cast<int>(v))) continue;
      bool witnessed = false;
      for (uint64_t s : sets)
        if (((s >> v) & 1) && !((gf.frame.diamond(s) >> u) & 1)) {
          witnessed = true;
          break;
        }
      if (!witnessed) {
        out.tight = false;
        out.tightWitness = {static_cast<int>(u), static_cast<int>(v)};
      }
    }
  return out;
}

namespace {

int eval_algebra(const ModalAlgebra& a, const Formula& f,
                 const std::map<std::string, int>& letters, std::map<std::string, int>& env) {
  switch (f->kind) {
    case Kind::PropLetter: {
      auto it = letters.find(f->name);
      if (it == letters.end())
        throw SemanticError(SemanticError::Code::UnknownLetter,
                            "no element assigned to proposition letter " + f->name);
      return it->second;
    }
    case Kind::FixVar: {
      auto it = env.find(f->name);
      if (it == env.end())
        throw SemanticError(SemanticError::Code::UnknownVariable,
                            "fixpoint variable " + f->name + " is not bound");
      return it->second;
    }
    case Kind::Not:
      return a.neg(eval_algebra(a, f->kids[0], letters, env));
    case Kind::And:
      return a.meet(eval_algebra(a, f->kids[0], letters, env),
                    eval_algebra(a, f->kids[1], letters, env));
    case Kind::Or:
      return a.join(eval_algebra(a, f->kids[0], letters, env),
                    eval_algebra(a, f->kids[1], letters, env));
    case Kind::Implies:
      return a.join(a.neg(eval_algebra(a, f->kids[0], letters, env)),
                    eval_algebra(a, f->kids[1], letters, env));
    case Kind::Diamond:
      return a.dia(eval_algebra(a, f->kids[0], letters, env));
    case Kind::Box:
      return a.neg(a.dia(a.neg(eval_algebra(a, f->kids[0], letters, env))));
    case Kind::Mu: {
      int acc = a.top();
      for (int cand = 0; cand < static_cast<int>(a.size()); ++cand) {
        auto saved = env.find(f->name);
        int old = saved != env.end() ? saved->second : -1;
        env[f->name] = cand;
        int image = eval_algebra(a, f->kids[0], letters, env);
        if (old >= 0)
          env[f->name] = old;
        else
          env.erase(f->name);
        if (a.leq(image, cand)) acc = a.meet(acc, cand);
      }
      return acc;
    }
    case Kind::Nu: {
      // complement-dual of mu
      int acc = a.top();
      for (int cand = 0; cand < static_cast<int>(a.size()); ++cand) {
        auto saved = env.find(f->name);
        int old = saved != env.end() ? saved->second : -1;
        env[f->name] = a.neg(cand);
        int image = a.neg(eval_algebra(a, f->kids[0], letters, env));
        if (old >= 0)
          env[f->name] = old;
        else
          env.erase(f->name);
        if (a.leq(image, cand)) acc = a.meet(acc, cand);
      }
      return a.neg(acc);
    }
    default:
      throw SemanticError(SemanticError::Code::InvalidFormula, "not a modal formula node");
  }
}

}  // namespace

int algebraic_mu(const ModalAlgebra& a, const Formula& f,
                 const std::map<std::string, int>& letters, const std::map<std::string, int>& env) {
  check_wellformed(Language::Modal, f);
  std::map<std::string, int> scratch = env;
  return eval_algebra(a, f, letters, scratch);
}

}  // namespace genmodels
