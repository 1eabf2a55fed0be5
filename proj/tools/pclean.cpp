// pclean command-line tool; all logic lives in pclean/cli.hpp.

#include <iostream>
#include <string>
#include <vector>

#include "pclean/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  pclean::CommandResult result = pclean::run_command(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
