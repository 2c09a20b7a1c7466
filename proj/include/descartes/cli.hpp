#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace descartes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand (tess, solve, quad, verify, enumerate, render).
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace descartes::cli
