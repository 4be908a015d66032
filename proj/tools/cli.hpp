#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ulab::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kUsage = 2,
  kUnknown = 3,
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One CSV row per catalog graph: sizes, bounds, exact and game numbers and
/// Class-1 status.
std::string catalog_csv(std::string_view name);

}  // namespace ulab::cli
