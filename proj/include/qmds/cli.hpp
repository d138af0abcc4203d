#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmds::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerification = 3;

/// Subcommands: exists, family, sweep, tables, fixtures. Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qmds::cli
