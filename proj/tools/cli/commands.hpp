#pragma once

#include <iosfwd>
#include <string>

#include "config.hpp"

namespace sdym::cli {

struct CommandOutput {
  std::string text;
  ExitCode code = ExitCode::Ok;
};

/// Runs the selected checks. Exit code 0 iff none failed.
CommandOutput cmd_verify(const RunConfig& config);
/// Curvature components on the window (or at --k): generic evaluation,
/// closed form where one exists, and their difference.
CommandOutput cmd_curvature(const RunConfig& config);
/// Gauge-transformed potential on the window and the applicable verdict.
CommandOutput cmd_gauge(const RunConfig& config);

/// Full command-line entry point. Reports go to `out` (or --out), messages
/// to `err`. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sdym::cli
