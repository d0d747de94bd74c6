#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "deckhand/result.hpp"

namespace deckhand::util {

struct ProcessResult {
  int exit_code = -1;
  bool timed_out = false;
  bool output_truncated = false;
  std::string output;  // interleaved stdout + stderr
};

/// Runs argv directly (no shell) in `cwd`, capturing combined output with a
/// wall-clock timeout and an output cap. On timeout the child is killed and
/// partial output is returned.
Result<ProcessResult> run_process(const std::vector<std::string>& argv,
                                  const std::filesystem::path& cwd, int timeout_ms,
                                  std::size_t output_cap);

/// Splits a command line into argv, honoring single and double quotes.
std::vector<std::string> split_command_line(const std::string& cmdline);

}  // namespace deckhand::util
