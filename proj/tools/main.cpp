#include <iostream>
#include <string>
#include <vector>

#include "meridian/cli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const meridian::CommandResult r = meridian::run(args);
  std::cout << r.report;
  std::cerr << r.error;
  return r.exit_code;
}
