#include "rotaperm/error.hpp"

namespace rotaperm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kUnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::kOddDegreeRequired: return "OddDegreeRequired";
    case ErrorCode::kEvenDegree: return "EvenDegree";
    case ErrorCode::kNoSolution: return "NoSolution";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kVariableMismatch: return "VariableMismatch";
    case ErrorCode::kMissingAssignment: return "MissingAssignment";
    case ErrorCode::kDegreeOverflow: return "DegreeOverflow";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kDomainTooLarge: return "DomainTooLarge";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kFormulaInconsistent: return "FormulaInconsistent";
    case ErrorCode::kNoPreimage: return "NoPreimage";
    case ErrorCode::kMultiplePreimages: return "MultiplePreimages";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace rotaperm
