#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stabidx::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kNotAchievable = 3,
  kCeilingExceeded = 4,
};

/// Entry point for the `stabidx` tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stabidx::cli
