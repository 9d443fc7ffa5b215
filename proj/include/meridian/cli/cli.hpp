#pragma once

#include <optional>
#include <string>
#include <vector>

namespace meridian {

/// Exit codes of the command line front end.
enum ExitCode : int {
  exit_ok = 0,
  /// The computation succeeded and the answer is negative (no epimorphism,
  /// a failed identity, a pipeline stage that does not match).
  exit_negative = 1,
  exit_input_error = 2,
  exit_resource_limit = 3,
};

struct CommandResult {
  int exit_code = exit_ok;
  /// Text for stdout: the human-readable report, or the JSON document when
  /// --json was given.
  std::string report;
  /// Text for stderr.
  std::string error;
  std::optional<std::string> json;
};

/// Runs one command; args excludes the program name. Never throws.
CommandResult run(const std::vector<std::string>& args);

/// Directory searched for preset names and missing file arguments.
std::string preset_directory();

}  // namespace meridian
