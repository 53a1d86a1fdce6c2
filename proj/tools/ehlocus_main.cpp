#include <iostream>
#include <vector>

#include "eh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  eh::CliResult res = eh::run_cli(args);
  if (!res.out.empty()) std::cout << res.out;
  if (!res.err.empty()) std::cerr << res.err;
  return res.code;
}
