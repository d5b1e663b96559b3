// Times every suite in both modes and checks the reports agree. The parallel
// kernels share their bodies with the serial reference, so any divergence
// here is a merge bug, not a semantics bug.
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "genmodels/experiments.hpp"

using namespace genmodels;

namespace {

bool same_report(const SuiteReport& a, const SuiteReport& b) {
  return a.name == b.name && a.checked == b.checked && a.failures == b.failures;
}

}  // namespace

int main(int argc, char** argv) {
  ExperimentConfig cfg;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--samples" && i + 1 < argc)
      cfg.samples = std::stoi(argv[++i]);
    else if (arg == "--seed" && i + 1 < argc)
      cfg.seed = std::stoull(argv[++i]);
    else if (arg == "--max-states" && i + 1 < argc)
      cfg.confluenceMaxStates = std::stoi(argv[++i]);
    else {
      std::cerr << "usage: bench_experiments [--samples N] [--seed S] [--max-states K]\n";
      return 2;
    }
  }

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not enabled; both columns run serially\n";
#endif
  std::cout << std::left << std::setw(24) << "suite" << std::right << std::setw(12) << "checks"
            << std::setw(12) << "serial s" << std::setw(12) << "parallel s" << std::setw(10)
            << "speedup" << "  agree\n";

  bool allAgree = true;
  double serialTotal = 0.0, parallelTotal = 0.0;
  for (const std::string& name : suite_names()) {
    ExperimentConfig serialCfg = cfg;
    serialCfg.mode = RunMode::Serial;
    ExperimentConfig parallelCfg = cfg;
    parallelCfg.mode = RunMode::Parallel;
    SuiteReport s = run_suite(name, serialCfg);
    SuiteReport p = run_suite(name, parallelCfg);
    bool agree = same_report(s, p);
    allAgree = allAgree && agree;
    serialTotal += s.seconds;
    parallelTotal += p.seconds;
    double speedup = p.seconds > 0.0 ? s.seconds / p.seconds : 0.0;
    std::cout << std::left << std::setw(24) << name << std::right << std::setw(12) << s.checked
              << std::setw(12) << std::fixed << std::setprecision(3) << s.seconds
              << std::setw(12) << p.seconds << std::setw(9) << std::setprecision(2) << speedup
              << "x  " << (agree ? "yes" : "NO") << "\n";
    if (!agree) {
      std::cout << "  serial:   " << s.summary() << "\n";
      std::cout << "  parallel: " << p.summary() << "\n";
    }
  }
  std::cout << std::left << std::setw(24) << "total" << std::right << std::setw(12) << ""
            << std::setw(12) << std::fixed << std::setprecision(3) << serialTotal
            << std::setw(12) << parallelTotal << "\n";
  if (!allAgree) {
    std::cout << "serial and parallel runs disagree\n";
    return 1;
  }
  return 0;
}
