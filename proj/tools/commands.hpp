#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace esakia::cli {

/// Exit codes: 0 when every verdict passes, 1 when one fails, 2 for usage
/// and input errors.
enum Exit { kPass = 0, kVerdictFailed = 1, kUsage = 2 };

/// Runs one command line (args[0] is the program name). Reports and documents
/// go to `out`, diagnostics to `err`. `env_seed` stands in for ESAKIA_SEED.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                const char* env_seed = nullptr);

}  // namespace esakia::cli
