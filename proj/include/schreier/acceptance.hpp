#pragma once

// The acceptance suites: oracle equivalence for the three engines, the
// index inequalities, the domination constants, the closed-form growth values, the
// flat-vector bound, the flat-vector search and the negative controls. Shared
// by the acceptance test binary and `schreier_lab selftest`.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schreier/norms.hpp"
#include "schreier/schreier_core.hpp"

namespace schreier::acceptance {

enum class Level { Quick, Full };

// The fast engines under test. Swapping one for a corrupted version is how
// the suites are mutation-tested.
struct Engines {
  std::function<Natural(const FinSet&)> tau1 = schreier::tau1;
  std::function<NormResult(const FinVec&, double)> norm_sp = schreier::norm_Sp;
  std::function<NormResult(const FinVec&, double)> norm_bp = schreier::norm_Bp;
};

// Named corruptions: "tau1-greedy-short", "sp-drop-heaviest", "bp-drop-first".
Engines mutated_engines(const std::string& mutation);
std::vector<std::string> mutation_names();

struct Options {
  std::uint64_t seed = 0;
  Level level = Level::Full;
  Engines engines;
  OracleBounds bounds;
};

struct CheckLine {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct CriterionReport {
  int id = 0;
  std::string title;
  bool passed = true;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::vector<CheckLine> checks;
  // First counterexample, verbatim, when a check failed.
  std::optional<std::string> certificate;
};

inline constexpr int kCriterionCount = 9;

CriterionReport run_criterion(int id, const Options& options);
std::vector<CriterionReport> run_all(const Options& options);

// One "PASS"/"FAIL" line per criterion plus indented sub-check lines.
std::string format_report(const CriterionReport& report);

}  // namespace schreier::acceptance
