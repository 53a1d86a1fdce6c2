#pragma once

#include <string>
#include <vector>

namespace eh {

// One expected-vs-computed comparison inside a verification suite.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string expected;
  std::string computed;
};

struct TableReport {
  int table = 0;
  std::vector<CheckResult> checks;

  long long passed() const;
  long long failed() const;
};

// Re-derives one reference table from the engines and compares against the
// frozen data. Valid ids are 2..8:
//   2  reduced quotient structures of the six families
//   3  the (2,4,4)-type catalog: cells and instantiated runs
//   4  the (2,3,6)-type catalog
//   5  the (3,3,3)-type catalog
//   6  extension rows: index, fullness, order ratios
//   7  oval counts per symmetry class at the smallest admissible runs
//   8  the tau action: extension relators, reflections, class fusion
// max_a bounds the instantiation size where a run is parameterised by a.
TableReport verify_table(int table, int max_a = 4);

// Runs the listed suites; an empty list means all of 2..8.
std::vector<TableReport> verify_tables(const std::vector<int>& ids, int max_a = 4);

bool all_passed(const std::vector<TableReport>& reports);

}  // namespace eh
