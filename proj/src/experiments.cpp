#include "genmodels/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iterator>
#include <random>
#include <sstream>

#include "genmodels/algebra.hpp"
#include "genmodels/cofinite.hpp"
#include "genmodels/errors.hpp"
#include "genmodels/fixpoint.hpp"
#include "genmodels/formula.hpp"
#include "genmodels/ga.hpp"
#include "genmodels/generate.hpp"
#include "genmodels/henkin.hpp"
#include "genmodels/kripke.hpp"
#include "genmodels/modal_model.hpp"
#include "genmodels/render.hpp"

namespace genmodels {

std::string SuiteReport::summary() const {
  std::ostringstream os;
  os << name << ": " << (ok() ? "PASS" : "FAIL") << " (" << checked << " checks";
  if (!failures.empty()) os << ", " << failures.size() << " failures";
  os << ", " << std::fixed << std::setprecision(2) << seconds << " s)";
  return os.str();
}

namespace {

using Body = std::function<std::string(long long)>;

// One kernel, two drivers. The body returns an empty string on success or a
// failure description. Parallel mode collects hits per thread and merges them
// back in index order, so both drivers produce identical failure lists. The
// body must not throw across the loop; anything escaping is converted here.
void run_indexed(RunMode mode, long long count, const Body& body, SuiteReport& report) {
  report.checked += count;
  auto guarded = [&body](long long i) -> std::string {
    try {
      return body(i);
    } catch (const std::exception& e) {
      return "item " + std::to_string(i) + ": unexpected error: " + e.what();
    }
  };
  if (mode == RunMode::Serial) {
    for (long long i = 0; i < count; ++i) {
      std::string hit = guarded(i);
      if (!hit.empty()) report.failures.push_back(std::move(hit));
    }
    return;
  }
  std::vector<std::pair<long long, std::string>> hits;
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<std::pair<long long, std::string>> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (long long i = 0; i < count; ++i) {
      std::string hit = guarded(i);
      if (!hit.empty()) local.emplace_back(i, std::move(hit));
    }
    if (!local.empty()) {
#pragma omp critical(genmodels_merge_hits)
      hits.insert(hits.end(), std::make_move_iterator(local.begin()),
                  std::make_move_iterator(local.end()));
    }
  }
#else
  for (long long i = 0; i < count; ++i) {
    std::string hit = guarded(i);
    if (!hit.empty()) hits.emplace_back(i, std::move(hit));
  }
#endif
  std::sort(hits.begin(), hits.end());
  for (auto& [idx, hit] : hits) report.failures.push_back(std::move(hit));
}

template <class Fill>
SuiteReport timed(const std::string& name, Fill&& fill) {
  SuiteReport report;
  report.name = name;
  auto t0 = std::chrono::steady_clock::now();
  fill(report);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

// i in [0, 530) enumerates all relation bit-patterns over 1, 2, 3 points.
std::pair<int, uint64_t> nth_small_relation(long long i) {
  if (i < 2) return {1, static_cast<uint64_t>(i)};
  if (i < 18) return {2, static_cast<uint64_t>(i - 2)};
  return {3, static_cast<uint64_t>(i - 18)};
}

KripkeFrame frame_from_bits(int n, uint64_t bits) {
  std::vector<std::string> worlds;
  for (int i = 0; i < n; ++i) worlds.push_back("w" + std::to_string(i));
  std::vector<uint64_t> succ(n, 0);
  for (int u = 0; u < n; ++u) succ[u] = (bits >> (u * n)) & ((uint64_t{1} << n) - 1);
  return KripkeFrame(std::move(worlds), std::move(succ));
}

std::string tuple_name(const std::vector<std::string>& domain, const std::vector<int>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += domain[t[i]];
  }
  return s + ")";
}

std::string preds_descriptor(const std::vector<std::string>& domain,
                             const std::map<std::string, PredInterp>& preds) {
  std::string s;
  for (const auto& [name, p] : preds) {
    s += " " + name + "={";
    bool first = true;
    for (const auto& t : p.tuples) {
      if (!first) s += ',';
      first = false;
      s += p.arity == 1 ? domain[t[0]] : tuple_name(domain, t);
    }
    s += "}";
  }
  return s;
}

std::string ga_descriptor(const GAModel& m) {
  std::string s = "V={";
  bool first = true;
  for (const auto& t : m.assignments) {
    if (!first) s += ',';
    first = false;
    s += tuple_name(m.domain, t);
  }
  s += "} |D|=" + std::to_string(m.domain.size());
  return s + preds_descriptor(m.domain, m.predicates);
}

std::string henkin_descriptor(const HenkinModel& m) {
  std::string s = "family={";
  for (size_t i = 0; i < m.family.size(); ++i) {
    if (i) s += ',';
    s += m.set_to_string(m.family[i]);
  }
  s += "} |D|=" + std::to_string(m.domain.size());
  return s + preds_descriptor(m.domain, m.predicates);
}

std::vector<std::vector<int>> all_tuples(int domSize, int arity) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(arity, 0);
  while (true) {
    out.push_back(t);
    int k = arity - 1;
    while (k >= 0 && ++t[k] == domSize) t[k--] = 0;
    if (k < 0) return out;
  }
}

PredInterp interp_from_bits(int domSize, int arity, uint64_t bits) {
  PredInterp p;
  p.arity = arity;
  auto tuples = all_tuples(domSize, arity);
  for (size_t i = 0; i < tuples.size(); ++i)
    if ((bits >> i) & 1) p.tuples.insert(tuples[i]);
  return p;
}

// All interpretations of P/1, Q/1, R/2 over {a, ...}, crossed with either
// every non-empty admissible-assignment set or just the full space.
std::vector<GAModel> enumerate_ga_models(int domSize, int nvars, bool fullSpaceOnly) {
  std::vector<std::string> domain;
  for (int i = 0; i < domSize; ++i) domain.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::string> vars =
      nvars == 1 ? std::vector<std::string>{"x"} : std::vector<std::string>{"x", "y"};
  auto tuples = all_tuples(domSize, nvars);
  std::vector<GAModel> out;
  uint64_t unaryCount = uint64_t{1} << domSize;
  uint64_t binaryCount = uint64_t{1} << (domSize * domSize);
  for (uint64_t pm = 0; pm < unaryCount; ++pm)
    for (uint64_t qm = 0; qm < unaryCount; ++qm)
      for (uint64_t rm = 0; rm < binaryCount; ++rm) {
        GAModel base;
        base.domain = domain;
        base.variables = vars;
        base.predicates["P"] = interp_from_bits(domSize, 1, pm);
        base.predicates["Q"] = interp_from_bits(domSize, 1, qm);
        base.predicates["R"] = interp_from_bits(domSize, 2, rm);
        if (fullSpaceOnly) {
          base.assignments.insert(tuples.begin(), tuples.end());
          out.push_back(std::move(base));
          continue;
        }
        for (uint64_t vm = 1; vm < (uint64_t{1} << tuples.size()); ++vm) {
          GAModel m = base;
          for (size_t i = 0; i < tuples.size(); ++i)
            if ((vm >> i) & 1) m.assignments.insert(tuples[i]);
          out.push_back(std::move(m));
        }
      }
  return out;
}

FormulaGrammar ga_grammar(int nvars, bool withExt) {
  FormulaGrammar g;
  if (nvars == 1) {
    g.atoms = {pred("P", {"x"}), pred("Q", {"x"}), pred("R", {"x", "x"}), eq("x", "x")};
    g.wrappers = {
        [](const Formula& f) { return exists("x", f); },
        [](const Formula& f) { return forall("x", f); },
        [](const Formula& f) { return poly_exists({"x"}, f); },
    };
  } else {
    g.atoms = {pred("P", {"x"}), pred("P", {"y"}), pred("Q", {"y"}),
               pred("R", {"x", "y"}), pred("R", {"y", "x"}), eq("x", "y")};
    g.wrappers = {
        [](const Formula& f) { return exists("x", f); },
        [](const Formula& f) { return exists("y", f); },
        [](const Formula& f) { return forall("x", f); },
        [](const Formula& f) { return forall("y", f); },
        [](const Formula& f) { return poly_exists({"x", "y"}, f); },
    };
  }
  if (withExt) g.wrappers.push_back([](const Formula& f) { return ext_dia(f); });
  return g;
}

FormulaGrammar mso_grammar() {
  FormulaGrammar g;
  g.atoms = {pred("p", {"x"}), pred("p", {"y"}), pred("R", {"x", "y"}), eq("x", "y"),
             set_atom("X", "x"), set_atom("X", "y"), set_atom("Y", "x")};
  g.wrappers = {
      [](const Formula& f) { return exists("x", f); },
      [](const Formula& f) { return forall("x", f); },
      [](const Formula& f) { return exists("y", f); },
      [](const Formula& f) { return exists_set("X", f); },
      [](const Formula& f) { return forall_set("X", f); },
      [](const Formula& f) { return exists_set("Y", f); },
  };
  return g;
}

struct HenkinCase {
  HenkinModel model;
  TwoSortedStructure st;
  bool fullFamily;
};

std::vector<HenkinCase> enumerate_henkin_cases(int domSize, bool fullFamilyOnly) {
  std::vector<std::string> domain;
  for (int i = 0; i < domSize; ++i) domain.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<uint64_t> powerset = HenkinModel::powerset_family(domSize);
  uint64_t unaryCount = uint64_t{1} << domSize;
  uint64_t binaryCount = uint64_t{1} << (domSize * domSize);
  std::vector<HenkinCase> out;
  for (uint64_t pm = 0; pm < unaryCount; ++pm)
    for (uint64_t rm = 0; rm < binaryCount; ++rm) {
      HenkinModel base;
      base.domain = domain;
      base.predicates["p"] = interp_from_bits(domSize, 1, pm);
      base.predicates["R"] = interp_from_bits(domSize, 2, rm);
      uint64_t familyChoices = uint64_t{1} << powerset.size();
      for (uint64_t fm = 1; fm < familyChoices; ++fm) {
        bool isFull = fm + 1 == familyChoices;
        if (fullFamilyOnly && !isFull) continue;
        HenkinModel m = base;
        for (size_t i = 0; i < powerset.size(); ++i)
          if ((fm >> i) & 1) m.family.push_back(powerset[i]);
        HenkinCase c{std::move(m), {}, isFull};
        c.st = to_two_sorted(c.model);
        out.push_back(std::move(c));
      }
    }
  return out;
}

bool closed_modal_wellformed(const Formula& f) {
  if (!free_variables(f).fixpoints.empty()) return false;
  try {
    check_wellformed(Language::Modal, f);
  } catch (const SemanticError&) {
    return false;
  }
  return true;
}

Formula ext_expand(const Formula& f) {
  switch (f->kind) {
    case Kind::PredAtom:
    case Kind::Equal:
      return f;
    case Kind::Not:
      return neg(ext_expand(f->kids[0]));
    case Kind::And:
      return conj(ext_expand(f->kids[0]), ext_expand(f->kids[1]));
    case Kind::Or:
      return disj(ext_expand(f->kids[0]), ext_expand(f->kids[1]));
    case Kind::Implies:
      return impl(ext_expand(f->kids[0]), ext_expand(f->kids[1]));
    case Kind::Exists:
      return ext_dia(exists(f->name, ext_expand(f->kids[0])));
    default:
      throw SemanticError(SemanticError::Code::InvalidFormula,
                          "the embedding covers the exists fragment only");
  }
}

}  // namespace

SuiteReport run_figure1(const ExperimentConfig& cfg) {
  return timed("figure1", [&](SuiteReport& report) {
    const Formula f = mu("X", disj(prop("p"), diamond(fixvar("X"))));
    const CofinSet base = CofinSet::finite({0});
    auto op = [&base](const CofinSet& s) { return set_union(base, fig1_diamond(s)); };
    run_indexed(
        cfg.mode, 4,
        [&](long long i) -> std::string {
          Fig1Model model;
          model.valuation["p"] = base;
          model.bound = cfg.symbolicBound;
          switch (i) {
            case 0: {
              SymbolicLfpResult r = fig1_lfp_standard(op, 24);
              if (r.converged) return "the standard chain closed on a finite set";
              std::vector<uint32_t> segment;
              for (uint32_t k = 0; k < 24; ++k) segment.push_back(k);
              if (!(r.prefix == CofinSet::finite(segment)))
                return "iterate 24 should be {0..23}, got " + r.prefix.to_string();
              return {};
            }
            case 1: {
              try {
                extension(model, f, Semantics::Standard);
              } catch (const SemanticError& e) {
                if (e.code() == SemanticError::Code::DivergentLfp) return {};
                return std::string("expected a divergence report, got: ") + e.what();
              }
              return "standard semantics accepted a chain that never closes";
            }
            case 2: {
              CofinSet got = extension(model, f, Semantics::General);
              if (!(got == CofinSet::universe()))
                return "general fixpoint should be N ∪ {∞}, got " + got.to_string();
              return {};
            }
            case 3: {
              // minimality cross-check against brute-forced candidates on {0..6}
              CofinSet result = extension(model, f, Semantics::General);
              for (uint64_t mask = 0; mask < 128; ++mask) {
                std::vector<uint32_t> elems;
                for (uint32_t b = 0; b < 7; ++b)
                  if ((mask >> b) & 1) elems.push_back(b);
                CofinSet fin = CofinSet::finite(elems);
                if (op(fin).subset_of(fin))
                  return "finite pre-fixed candidate exists: " + fin.to_string();
                CofinSet cof = CofinSet::cofinite(elems);
                if (op(cof).subset_of(cof) && !result.subset_of(cof))
                  return "general fixpoint is not below pre-fixed " + cof.to_string();
              }
              return {};
            }
            default:
              return {};
          }
        },
        report);
  });
}

SuiteReport run_jt_roundtrip(const ExperimentConfig& cfg) {
  return timed("jt_roundtrip", [&](SuiteReport& report) {
    const long long frames = 530, tables = 530;
    run_indexed(
        cfg.mode, frames + tables,
        [&](long long i) -> std::string {
          if (i < frames) {
            auto [n, bits] = nth_small_relation(i);
            KripkeFrame frame = frame_from_bits(n, bits);
            ModalAlgebra alg = complex_algebra(frame);
            IsoCheck iso = jt_iso_check(alg);
            std::string where = "complex algebra, n=" + std::to_string(n) +
                                " rel-bits=" + std::to_string(bits);
            if (!iso.ok) return where + ": " + iso.detail;
            // The dual frame must be the original frame again: atoms of the
            // powerset algebra are the singletons in mask order, so
            // ultrafilter k is world k.
            GeneralFrame dual = ultrafilter_frame(alg);
            if (dual.frame.size() != frame.size())
              return where + ": dual frame has " + std::to_string(dual.frame.size()) +
                     " worlds";
            for (int u = 0; u < n; ++u)
              if (dual.frame.succ()[u] != frame.succ()[u])
                return where + ": dual relation differs at world " + std::to_string(u);
            if (dual.family.materialize(dual.frame.size()).size() != (size_t{1} << n))
              return where + ": dual family is not the full powerset";
            return {};
          }
          auto [k, bits] = nth_small_relation(i - frames);
          int sz = 1 << k;
          AlgebraTables t;
          for (int m = 0; m < sz; ++m) t.carrier.push_back("x" + std::to_string(m));
          t.join.assign(sz, std::vector<int>(sz));
          t.meet.assign(sz, std::vector<int>(sz));
          t.neg.resize(sz);
          t.diamond.resize(sz);
          for (int a = 0; a < sz; ++a) {
            t.neg[a] = (sz - 1) & ~a;
            for (int b = 0; b < sz; ++b) {
              t.join[a][b] = a | b;
              t.meet[a][b] = a & b;
            }
          }
          t.bot = 0;
          t.top = sz - 1;
          // a normal diamond is free on atoms; bits packs the atom images
          std::vector<int> diaAtom(k);
          for (int j = 0; j < k; ++j)
            diaAtom[j] = static_cast<int>((bits >> (j * k)) & static_cast<uint64_t>(sz - 1));
          for (int m = 0; m < sz; ++m) {
            int d = 0;
            for (int j = 0; j < k; ++j)
              if ((m >> j) & 1) d |= diaAtom[j];
            t.diamond[m] = d;
          }
          ModalAlgebra alg = ModalAlgebra::from_tables(std::move(t));
          IsoCheck iso = jt_iso_check(alg);
          if (!iso.ok)
            return "powerset algebra, atoms=" + std::to_string(k) +
                   " dia-bits=" + std::to_string(bits) + ": " + iso.detail;
          return {};
        },
        report);
  });
}

SuiteReport run_confluence(const ExperimentConfig& cfg) {
  return timed("confluence", [&](SuiteReport& report) {
    if (cfg.confluenceMaxStates < 1 || cfg.confluenceMaxStates > 3)
      throw InputError("the exhaustive confluence regime covers 1 to 3 states");
    struct Block {
      int n;
      long long offset;
      long long count;
    };
    std::vector<Block> blocks;
    long long total = 0;
    for (int n = 1; n <= cfg.confluenceMaxStates; ++n) {
      long long rel = 1LL << (n * n);
      blocks.push_back({n, total, rel * rel});
      total += rel * rel;
    }
    run_indexed(
        cfg.mode, total,
        [&, blocks](long long i) -> std::string {
          int n = 1;
          long long off = i;
          for (const auto& b : blocks)
            if (i >= b.offset && i < b.offset + b.count) {
              n = b.n;
              off = i - b.offset;
            }
          long long rel = 1LL << (n * n);
          uint64_t xm = static_cast<uint64_t>(off / rel);
          uint64_t ym = static_cast<uint64_t>(off % rel);
          AbstractAssignmentFrame frame;
          for (int s = 0; s < n; ++s) frame.states.push_back("s" + std::to_string(s));
          std::vector<uint64_t> rx(n), ry(n);
          for (int s = 0; s < n; ++s) {
            rx[s] = (xm >> (s * n)) & ((uint64_t{1} << n) - 1);
            ry[s] = (ym >> (s * n)) & ((uint64_t{1} << n) - 1);
          }
          frame.transitions["x"] = std::move(rx);
          frame.transitions["y"] = std::move(ry);
          bool valid = confluence_axiom_valid(frame, "x", "y");
          bool confluent = check_confluence(frame, "x", "y").confluent;
          if (valid != confluent)
            return "n=" + std::to_string(n) + " x-bits=" + std::to_string(xm) +
                   " y-bits=" + std::to_string(ym) + ": axiom " +
                   (valid ? "valid" : "refutable") + " vs " +
                   (confluent ? "confluent" : "non-confluent");
          return {};
        },
        report);
  });
}

SuiteReport run_guarded_faithfulness(const ExperimentConfig& cfg) {
  return timed("guarded_faithfulness", [&](SuiteReport& report) {
    for (int nvars = 1; nvars <= 2; ++nvars) {
      std::vector<std::string> universe =
          nvars == 1 ? std::vector<std::string>{"x"} : std::vector<std::string>{"x", "y"};
      FormulaGrammar g = ga_grammar(nvars, false);
      std::vector<Formula> formulas = g.up_to_depth(1);
      std::vector<Formula> deep = g.samples(cfg.samples, 3, cfg.seed + nvars);
      formulas.insert(formulas.end(), deep.begin(), deep.end());
      struct Case {
        Formula source;
        Formula translated;
        std::string guard;
      };
      std::vector<Case> cases;
      cases.reserve(formulas.size());
      for (const Formula& f : formulas) {
        GuardedTranslation t = translate_guarded(f, universe);
        cases.push_back({f, t.formula, t.guard});
      }
      run_indexed(
          cfg.mode, static_cast<long long>(cases.size()),
          [&](long long i) -> std::string {
            const Case& c = cases[i];
            check_wellformed(Language::Fol, c.translated);
            if (c.guard != "G")
              return "guard for \"" + render(c.source) + "\" should be fresh name G, got " +
                     c.guard;
            if (!is_guarded(c.translated, {c.guard}))
              return "translation of \"" + render(c.source) +
                     "\" is not guarded: " + render(c.translated);
            return {};
          },
          report);
      std::vector<GAModel> models = enumerate_ga_models(1, nvars, false);
      {
        std::vector<GAModel> two = enumerate_ga_models(2, nvars, false);
        models.insert(models.end(), std::make_move_iterator(two.begin()),
                      std::make_move_iterator(two.end()));
      }
      std::vector<GAModel> expanded;
      expanded.reserve(models.size());
      for (const GAModel& m : models) {
        GAModel x = m;
        PredInterp guard;
        guard.arity = nvars;
        guard.tuples = m.assignments;
        x.predicates["G"] = std::move(guard);
        expanded.push_back(std::move(x));
      }
      run_indexed(
          cfg.mode, static_cast<long long>(models.size()) * static_cast<long long>(cases.size()),
          [&](long long i) -> std::string {
            const GAModel& model = models[i / cases.size()];
            const GAModel& guarded = expanded[i / cases.size()];
            const Case& c = cases[i % cases.size()];
            if (c.guard != "G") return {};  // already flagged above
            for (const auto& s : model.assignments) {
              bool restricted = eval_ga(model, c.source, s);
              bool classical = eval_standard_fol(guarded, c.translated, s);
              if (restricted != classical)
                return "\"" + render(c.source) + "\" at " + tuple_name(model.domain, s) +
                       ", " + ga_descriptor(model) + ": restricted " +
                       (restricted ? "true" : "false") + ", relativized classical " +
                       (classical ? "true" : "false");
            }
            return {};
          },
          report);
    }
  });
}

SuiteReport run_tau_correspondence(const ExperimentConfig& cfg) {
  return timed("tau_correspondence", [&](SuiteReport& report) {
    FormulaGrammar g = mso_grammar();
    std::vector<Formula> formulas = g.up_to_depth(1);
    std::vector<Formula> deep = g.samples(cfg.samples, 3, cfg.seed);
    formulas.insert(formulas.end(), deep.begin(), deep.end());
    struct Case {
      Formula source;
      TauResult tau;
    };
    std::vector<Case> cases;
    cases.reserve(formulas.size());
    for (const Formula& f : formulas) cases.push_back({f, tau_translate(f)});
    std::vector<HenkinCase> hcases = enumerate_henkin_cases(1, false);
    {
      std::vector<HenkinCase> two = enumerate_henkin_cases(2, false);
      hcases.insert(hcases.end(), std::make_move_iterator(two.begin()),
                    std::make_move_iterator(two.end()));
    }
    // structural sanity per model: the two-sorted companion is extensional,
    // and with the powerset family it is full
    run_indexed(
        cfg.mode, static_cast<long long>(hcases.size()),
        [&](long long i) -> std::string {
          const HenkinCase& hc = hcases[i];
          if (!check_ext(hc.st).ok)
            return henkin_descriptor(hc.model) + ": companion structure not extensional";
          if (hc.fullFamily != check_fullness(hc.st))
            return henkin_descriptor(hc.model) + ": fullness misreported";
          return {};
        },
        report);
    run_indexed(
        cfg.mode,
        static_cast<long long>(hcases.size()) * static_cast<long long>(cases.size()),
        [&](long long i) -> std::string {
          const HenkinCase& hc = hcases[i / cases.size()];
          const Case& c = cases[i % cases.size()];
          FreeVars fv = free_variables(c.source);
          std::vector<std::string> objVars(fv.objects.begin(), fv.objects.end());
          std::vector<std::string> setVars(fv.sets.begin(), fv.sets.end());
          size_t domSize = hc.model.domain.size();
          size_t famSize = hc.model.family.size();
          long long objCombos = 1, setCombos = 1;
          for (size_t k = 0; k < objVars.size(); ++k) objCombos *= domSize;
          for (size_t k = 0; k < setVars.size(); ++k) setCombos *= famSize;
          for (long long oc = 0; oc < objCombos; ++oc)
            for (long long sc = 0; sc < setCombos; ++sc) {
              std::map<std::string, int> objAssign;
              std::map<std::string, uint64_t> setAssign;
              std::map<std::string, int> predAssign;
              long long o = oc, s2 = sc;
              for (const auto& v : objVars) {
                objAssign[v] = static_cast<int>(o % domSize);
                o /= domSize;
              }
              for (const auto& v : setVars) {
                int fi = static_cast<int>(s2 % famSize);
                s2 /= famSize;
                setAssign[v] = hc.model.family[fi];
                for (const auto& [mso, twoSorted] : c.tau.setVarNames)
                  if (mso == v) predAssign[twoSorted] = fi;
              }
              bool henkin = eval_mso(hc.model, c.source, objAssign, setAssign);
              bool translated = eval_two_sorted(hc.st, c.tau.formula, objAssign, predAssign);
              if (henkin != translated)
                return "\"" + render(c.source) + "\" vs \"" + render(c.tau.formula) +
                       "\", " + henkin_descriptor(hc.model) + ": set-family truth " +
                       (henkin ? "true" : "false") + ", two-sorted truth " +
                       (translated ? "true" : "false");
              if (hc.fullFamily &&
                  eval_mso_standard(hc.model, c.source, objAssign, setAssign) != henkin)
                return "\"" + render(c.source) + "\", " + henkin_descriptor(hc.model) +
                       ": full family disagrees with the standard evaluator";
            }
          return {};
        },
        report);
  });
}

SuiteReport run_polyadic_regression(const ExperimentConfig& cfg) {
  return timed("polyadic_regression", [&](SuiteReport& report) {
    GAModel m;
    m.domain = {"a", "b"};
    m.variables = {"x", "y"};
    m.predicates["P"] = PredInterp{1, {{1}}};
    m.predicates["Q"] = PredInterp{1, {{1}}};
    m.assignments = {{0, 0}, {1, 1}};
    const Formula matrix = conj(pred("P", {"x"}), pred("Q", {"y"}));
    const Formula simultaneous = poly_exists({"x", "y"}, matrix);
    const Formula iteratedXY = exists("x", exists("y", matrix));
    const Formula iteratedYX = exists("y", exists("x", matrix));
    const std::vector<int> diagA = {0, 0}, diagB = {1, 1};
    run_indexed(
        cfg.mode, 4,
        [&](long long i) -> std::string {
          switch (i) {
            case 0:
              if (!eval_ga(m, simultaneous, diagA) || !eval_ga(m, simultaneous, diagB))
                return "simultaneous re-assignment misses the admissible witness (b,b)";
              return {};
            case 1:
              if (eval_ga(m, iteratedXY, diagA) || eval_ga(m, iteratedYX, diagA))
                return "iterated quantifiers escaped the diagonal from (a,a)";
              return {};
            case 2:
              if (!eval_ga(m, iteratedXY, diagB))
                return "iterated quantifiers should succeed from (b,b)";
              return {};
            case 3:
              if (!eval_standard_fol(m, simultaneous, diagA) ||
                  !eval_standard_fol(m, iteratedXY, diagA))
                return "classically both quantifier forms hold everywhere";
              return {};
            default:
              return {};
          }
        },
        report);
  });
}

SuiteReport run_ext_embedding(const ExperimentConfig& cfg) {
  return timed("ext_embedding", [&](SuiteReport& report) {
    FormulaGrammar g;
    g.atoms = {pred("P", {"x"}), pred("P", {"y"}), eq("x", "y")};
    g.wrappers = {
        [](const Formula& f) { return exists("x", f); },
        [](const Formula& f) { return exists("y", f); },
    };
    std::vector<Formula> formulas = g.up_to_depth(2);
    std::vector<Formula> embedded;
    embedded.reserve(formulas.size());
    for (const Formula& f : formulas) embedded.push_back(ext_expand(f));
    // configurations: interpretation of P × admissible set × starting point
    std::vector<GAModel> models;
    std::vector<std::pair<int, std::vector<int>>> configs;  // model index, assignment
    auto tuples = all_tuples(2, 2);
    for (uint64_t pm = 0; pm < 4; ++pm)
      for (uint64_t vm = 1; vm < 16; ++vm) {
        GAModel m;
        m.domain = {"a", "b"};
        m.variables = {"x", "y"};
        m.predicates["P"] = interp_from_bits(2, 1, pm);
        for (size_t i = 0; i < tuples.size(); ++i)
          if ((vm >> i) & 1) m.assignments.insert(tuples[i]);
        int idx = static_cast<int>(models.size());
        for (const auto& s : m.assignments) configs.emplace_back(idx, s);
        models.push_back(std::move(m));
      }
    run_indexed(
        cfg.mode,
        static_cast<long long>(formulas.size()) * static_cast<long long>(configs.size()),
        [&](long long i) -> std::string {
          const Formula& f = formulas[i / configs.size()];
          const Formula& fx = embedded[i / configs.size()];
          const auto& [mi, s] = configs[i % configs.size()];
          const GAModel& m = models[mi];
          bool classical = eval_standard_fol(m, f, s);
          bool viaExtension = eval_extension_modality(m, fx, s);
          if (classical != viaExtension)
            return "\"" + render(f) + "\" at " + tuple_name(m.domain, s) + ", " +
                   ga_descriptor(m) + ": classical " + (classical ? "true" : "false") +
                   ", extension embedding " + (viaExtension ? "true" : "false");
          return {};
        },
        report);
  });
}

SuiteReport run_closure_oracle(const ExperimentConfig& cfg) {
  return timed("closure_oracle", [&](SuiteReport& report) {
    std::vector<BinaryRelation> randoms;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> pickSize(4, 8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    randoms.reserve(cfg.samples);
    for (int k = 0; k < cfg.samples; ++k) {
      int n = pickSize(rng);
      BinaryRelation r;
      for (int i = 0; i < n; ++i) r.universe.push_back("v" + std::to_string(i));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (unit(rng) < 0.3) r.pairs.insert({a, b});
      randoms.push_back(std::move(r));
    }
    const long long exhaustive = 530;
    run_indexed(
        cfg.mode, exhaustive + cfg.samples,
        [&](long long i) -> std::string {
          BinaryRelation r;
          if (i < exhaustive) {
            auto [n, bits] = nth_small_relation(i);
            for (int w = 0; w < n; ++w) r.universe.push_back("v" + std::to_string(w));
            for (int a = 0; a < n; ++a)
              for (int b = 0; b < n; ++b)
                if ((bits >> (a * n + b)) & 1) r.pairs.insert({a, b});
          } else {
            r = randoms[i - exhaustive];
          }
          BinaryRelation closure = transitive_closure_fp(r);
          int n = static_cast<int>(r.universe.size());
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
              bool viaFixpoint = closure.pairs.count({x, y}) != 0;
              bool viaPaths = path_oracle(r, x, y);
              if (viaFixpoint != viaPaths)
                return "digraph item " + std::to_string(i) + ": fixpoint closure and path " +
                       "search disagree at (" + std::to_string(x) + "," + std::to_string(y) +
                       ")";
            }
          return {};
        },
        report);
  });
}

SuiteReport run_conservativity(const ExperimentConfig& cfg) {
  return timed("conservativity", [&](SuiteReport& report) {
    // Modal: full admissible family.
    {
      FormulaGrammar g;
      g.atoms = {prop("p"), prop("q"), fixvar("X")};
      g.wrappers = {
          [](const Formula& f) { return diamond(f); },
          [](const Formula& f) { return box(f); },
          [](const Formula& f) { return mu("X", f); },
          [](const Formula& f) { return nu("X", f); },
      };
      std::vector<Formula> formulas;
      for (const Formula& f : g.up_to_depth(2))
        if (closed_modal_wellformed(f)) formulas.push_back(f);
      std::vector<ModalModel> models;
      for (int n = 1; n <= 2; ++n) {
        uint64_t worldMasks = uint64_t{1} << n;
        for (uint64_t bits = 0; bits < (uint64_t{1} << (n * n)); ++bits) {
          KripkeFrame frame = frame_from_bits(n, bits);
          for (uint64_t pm = 0; pm < worldMasks; ++pm)
            for (uint64_t qm = 0; qm < worldMasks; ++qm)
              models.emplace_back(GeneralFrame{frame, AdmissibleFamily::full_family()},
                                  std::map<std::string, uint64_t>{{"p", pm}, {"q", qm}});
        }
      }
      std::mt19937_64 rng(cfg.seed * 31 + 7);
      for (int k = 0; k < cfg.samples / 2; ++k) {
        KripkeFrame frame = frame_from_bits(3, rng() & 511);
        models.emplace_back(
            GeneralFrame{frame, AdmissibleFamily::full_family()},
            std::map<std::string, uint64_t>{{"p", rng() & 7}, {"q", rng() & 7}});
      }
      run_indexed(
          cfg.mode,
          static_cast<long long>(models.size()) * static_cast<long long>(formulas.size()),
          [&](long long i) -> std::string {
            const ModalModel& m = models[i / formulas.size()];
            const Formula& f = formulas[i % formulas.size()];
            uint64_t standard = extension(m, f, Semantics::Standard);
            uint64_t general = extension(m, f, Semantics::General);
            if (standard != general)
              return "modal \"" + render(f) + "\" on " + std::to_string(m.frame().size()) +
                     " worlds: standard " + m.frame().set_to_string(standard) + ", general " +
                     m.frame().set_to_string(general);
            return {};
          },
          report);
    }
    // First-order: full assignment space.
    {
      FormulaGrammar g = ga_grammar(2, true);
      std::vector<Formula> formulas = g.up_to_depth(1);
      std::vector<Formula> deep = g.samples(cfg.samples / 2, 3, cfg.seed + 17);
      formulas.insert(formulas.end(), deep.begin(), deep.end());
      std::vector<GAModel> models = enumerate_ga_models(1, 2, true);
      {
        std::vector<GAModel> two = enumerate_ga_models(2, 2, true);
        models.insert(models.end(), std::make_move_iterator(two.begin()),
                      std::make_move_iterator(two.end()));
      }
      run_indexed(
          cfg.mode,
          static_cast<long long>(models.size()) * static_cast<long long>(formulas.size()),
          [&](long long i) -> std::string {
            const GAModel& m = models[i / formulas.size()];
            const Formula& f = formulas[i % formulas.size()];
            for (const auto& s : m.assignments) {
              bool restricted = eval_ga(m, f, s);
              bool classical = eval_standard_fol(m, f, s);
              if (restricted != classical)
                return "first-order \"" + render(f) + "\" at " + tuple_name(m.domain, s) +
                       ", " + ga_descriptor(m) + ": full space " +
                       (restricted ? "true" : "false") + ", classical " +
                       (classical ? "true" : "false");
            }
            return {};
          },
          report);
    }
    // Monadic second-order: powerset family.
    {
      std::vector<Formula> formulas = mso_grammar().up_to_depth(1);
      std::vector<HenkinCase> hcases = enumerate_henkin_cases(1, true);
      {
        std::vector<HenkinCase> two = enumerate_henkin_cases(2, true);
        hcases.insert(hcases.end(), std::make_move_iterator(two.begin()),
                      std::make_move_iterator(two.end()));
      }
      run_indexed(
          cfg.mode,
          static_cast<long long>(hcases.size()) * static_cast<long long>(formulas.size()),
          [&](long long i) -> std::string {
            const HenkinModel& m = hcases[i / formulas.size()].model;
            const Formula& f = formulas[i % formulas.size()];
            FreeVars fv = free_variables(f);
            std::vector<std::string> objVars(fv.objects.begin(), fv.objects.end());
            std::vector<std::string> setVars(fv.sets.begin(), fv.sets.end());
            size_t domSize = m.domain.size();
            size_t famSize = m.family.size();
            long long objCombos = 1, setCombos = 1;
            for (size_t k = 0; k < objVars.size(); ++k) objCombos *= domSize;
            for (size_t k = 0; k < setVars.size(); ++k) setCombos *= famSize;
            for (long long oc = 0; oc < objCombos; ++oc)
              for (long long sc = 0; sc < setCombos; ++sc) {
                std::map<std::string, int> objAssign;
                std::map<std::string, uint64_t> setAssign;
                long long o = oc, s2 = sc;
                for (const auto& v : objVars) {
                  objAssign[v] = static_cast<int>(o % domSize);
                  o /= domSize;
                }
                for (const auto& v : setVars) {
                  setAssign[v] = m.family[s2 % famSize];
                  s2 /= famSize;
                }
                bool henkin = eval_mso(m, f, objAssign, setAssign);
                bool standard = eval_mso_standard(m, f, objAssign, setAssign);
                if (henkin != standard)
                  return "second-order \"" + render(f) + "\", " + henkin_descriptor(m) +
                         ": powerset family " + (henkin ? "true" : "false") + ", standard " +
                         (standard ? "true" : "false");
              }
            return {};
          },
          report);
    }
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "figure1",           "jt_roundtrip",       "confluence",
      "guarded_faithfulness", "tau_correspondence", "polyadic_regression",
      "ext_embedding",     "closure_oracle",     "conservativity"};
  return names;
}

SuiteReport run_suite(const std::string& name, const ExperimentConfig& cfg) {
  if (name == "figure1") return run_figure1(cfg);
  if (name == "jt_roundtrip") return run_jt_roundtrip(cfg);
  if (name == "confluence") return run_confluence(cfg);
  if (name == "guarded_faithfulness") return run_guarded_faithfulness(cfg);
  if (name == "tau_correspondence") return run_tau_correspondence(cfg);
  if (name == "polyadic_regression") return run_polyadic_regression(cfg);
  if (name == "ext_embedding") return run_ext_embedding(cfg);
  if (name == "closure_oracle") return run_closure_oracle(cfg);
  if (name == "conservativity") return run_conservativity(cfg);
  std::string known;
  for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
  throw InputError("unknown suite \"" + name + "\"; expected one of: " + known);
}

}  // namespace genmodels
