#pragma once

#include <iosfwd>
#include <string>

#include "sergeev/config.hpp"
#include "sergeev/structure_analysis.hpp"

namespace sergeev {

enum ExitCode : int {
  kExitPass = 0,
  kExitFailure = 1,
  kExitConfig = 2,
  kExitBudget = 3,
  kExitIo = 4,
};

struct SuiteOutcome {
  int exit_code = kExitPass;
  std::string output;  // rendered in the configured format
};

/// Runs the configured subcommand. Output is returned, not written.
SuiteOutcome run_command(const RunConfig& config);

/// Writes through a temporary file and rename. Throws std::runtime_error.
void write_atomically(const std::string& path, const std::string& content);

/// Full entry point: parse, run, write; returns the process exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sergeev
