#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rotaperm::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // not a permutation, inequivalent, failed certificate
  kUsage = 2,
  kInternal = 3,  // e.g. a closed form that does not map back
};

/// Runs one invocation. args excludes the program name. JSON goes to out,
/// human-readable notes to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rotaperm::cli
