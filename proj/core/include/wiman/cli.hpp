#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace wiman::cli {

using json = nlohmann::ordered_json;

/// Exit codes: 0 all checks passed, 1 negative or inconclusive mathematical
/// verdict, 2 usage error, 3 internal integrity failure.
struct RunResult {
  int exit_code = 0;
  json report;     // machine-readable report (schema-stable)
  std::string text;  // human-oriented rendering
};

/// Execute one subcommand. argv excludes the program name.
RunResult run(const std::vector<std::string>& argv);

/// Convenience main()-shaped wrapper: prints the selected format to stdout.
int run_main(int argc, char** argv);

}  // namespace wiman::cli
