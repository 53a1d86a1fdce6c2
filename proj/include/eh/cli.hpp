#pragma once

#include <string>
#include <vector>

namespace eh {

// In-process CLI entry point. Exit codes: 0 success, 2 usage or constraint
// error, 3 domain precondition violation, 4 verification mismatch.
struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args);

}  // namespace eh
