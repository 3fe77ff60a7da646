#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs the command line (args[0] is the program name). Output files named by
/// --out are written directly; everything else goes to `out` / `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wq::cli
