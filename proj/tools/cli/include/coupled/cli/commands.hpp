#pragma once

#include <iosfwd>

namespace coupled::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_invalid = 1,
  exit_topology = 2,
  exit_parse = 3,
  exit_parameter = 4,
  exit_output = 5,
};

/// Entry point of coupled-sched: solve, validate, generate and bench.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace coupled::cli
