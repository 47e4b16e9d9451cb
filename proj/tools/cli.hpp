#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace scminor::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,  ///< e.g. input graph is not self-complementary
  kUsage = 2,     ///< bad arguments, unreadable input, malformed graph6
  kBudget = 3,    ///< oracle budget exhausted
};

/// Oracle budget: SCMINOR_BUDGET if set to a positive integer, else the library default.
std::uint64_t default_budget();

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace scminor::cli
