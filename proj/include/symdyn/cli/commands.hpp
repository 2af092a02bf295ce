#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symdyn::cli {

inline constexpr int kReportSchema = 1;

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitResourceCap = 3,
  kExitPrecondition = 4,
};

struct CommandResult {
  int exit_code;
  std::string output;  // the JSON report (or help text)
};

// Runs one subcommand. `args` excludes the program name. Documents named
// "-" are read from `in`.
CommandResult run_command(const std::vector<std::string>& args, std::istream& in);

}  // namespace symdyn::cli
