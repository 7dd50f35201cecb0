#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace picwalk::cli {

/// Runs one command line (without the program name). Verdicts and reports
/// go to `out`, diagnostics to `err`. Returns 0 on success or a true
/// verdict, 1 on a false verdict or a mismatch, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace picwalk::cli
