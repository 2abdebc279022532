#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Entry point shared by the charlab binary and the CLI tests. `args`
// excludes the program name. Reports go to `out` unless --out is given;
// diagnostics and summaries go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charlab::cli
