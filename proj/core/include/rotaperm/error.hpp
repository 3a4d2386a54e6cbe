#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rotaperm {

enum class ErrorCode {
  kInvalidArgument,
  kReducibleModulus,
  kUnsupportedDegree,
  kOddDegreeRequired,
  kEvenDegree,
  kNoSolution,
  kSyntaxError,
  kUnknownVariable,
  kVariableMismatch,
  kMissingAssignment,
  kDegreeOverflow,
  kDegenerateInput,
  kUnknownName,
  kDomainTooLarge,
  kNotAPermutation,
  kFormulaInconsistent,
  kNoPreimage,
  kMultiplePreimages,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace rotaperm
