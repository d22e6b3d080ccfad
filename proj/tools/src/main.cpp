#include <cstdlib>
#include <iostream>

#include "lcx_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  lcx::cli::Context ctx{std::cout, std::cerr, std::nullopt};
  if (const char* dir = std::getenv("LCX_REPORT_DIR"); dir != nullptr && *dir != '\0') {
    ctx.report_dir_env = dir;
  }
  return lcx::cli::runCli(args, ctx);
}
