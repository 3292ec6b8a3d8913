#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace valmat {

/// Runs the command-line tool. Results go to `out` as a single JSON object
/// (DOT text for export-dot), error messages to `err`. Exit codes: 0 success,
/// 1 domain error, 2 parse/usage error, 3 internal theorem violation.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace valmat
