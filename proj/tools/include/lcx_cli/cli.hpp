#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace lcx::cli {

struct Context {
  std::ostream& out;
  std::ostream& err;
  /// Value of LCX_REPORT_DIR, if set; it takes precedence over --report-dir.
  std::optional<std::string> report_dir_env;
};

/// Runs `lcx <args...>` in-process and returns the exit code
/// (0 ok, 1 spec error, 2 cap reached, 3 certificate failure).
int runCli(const std::vector<std::string>& args, Context& ctx);

}  // namespace lcx::cli
