#include <iostream>
#include <string>
#include <vector>

#include "symdyn/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = symdyn::cli::run_command(args, std::cin);
  std::cout << result.output;
  return result.exit_code;
}
