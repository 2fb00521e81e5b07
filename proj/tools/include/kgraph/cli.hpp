#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgraph::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs one subcommand. `args` excludes the program name. The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgraph::cli
