#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hmaps::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kOk = 0,
  kFail = 1,          // a verification answered no
  kPrecondition = 2,  // bad input or violated precondition
  kUndecided = 3,     // search budget exhausted
};

/// args excludes the program name. Output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hmaps::cli
