// Acceptance gate. With no arguments runs every criterion; with criterion ids
// runs only those. One PASS/FAIL line per criterion, exit 1 if any failed.
//
//   acceptance [--seed N] [--quick] [id ...]

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "schreier/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace schreier::acceptance;
  Options options;
  options.bounds = schreier::OracleBounds::from_env();
  std::vector<int> ids;
  try {
    for (int i = 1; i < argc; ++i) {
      const std::string arg = argv[i];
      if (arg == "--seed" && i + 1 < argc) {
        options.seed = std::stoull(argv[++i]);
      } else if (arg == "--quick") {
        options.level = Level::Quick;
      } else {
        const int id = std::stoi(arg);
        if (id < 1 || id > kCriterionCount) throw std::out_of_range(arg);
        ids.push_back(id);
      }
    }
  } catch (const std::exception&) {
    std::cerr << "usage: acceptance [--seed N] [--quick] [criterion 1-" << kCriterionCount << " ...]\n";
    return 2;
  }
  if (ids.empty()) {
    for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  }

  int failed = 0;
  for (int id : ids) {
    const auto report = run_criterion(id, options);
    std::cout << format_report(report) << std::flush;
    if (!report.passed) ++failed;
  }
  std::cout << (failed == 0 ? "acceptance: all criteria passed"
                            : "acceptance: " + std::to_string(failed) + " criterion(s) failed")
            << " (seed " << options.seed << ")\n";
  return failed == 0 ? 0 : 1;
}
