#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace censym::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one subcommand; returns the process exit code (0 success,
/// 2 precondition/parse error, 3 resource limit). The report JSON goes to
/// `out`, usage errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace censym::cli
