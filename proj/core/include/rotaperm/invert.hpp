#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rotaperm/family.hpp"
#include "rotaperm/field.hpp"

namespace rotaperm {

/// Numeric A, B, C, D of the T1 cubic resolvent A Y^3 + B Y^2 + C Y + D at (a, b, c).
struct ResolventCoeffs {
  Elem A, B, C, D;
};
ResolventCoeffs resolvent_coeffs(const Field& field, Elem a, Elem b, Elem c);

// Closed-form inverters. Each re-evaluates F at its answer and throws
// kFormulaInconsistent on mismatch; all need odd m (kOddDegreeRequired).
Triple invert_T3(const Field& field, const Triple& target);
Triple invert_T4(const Field& field, const Triple& target);
Triple invert_T5(const Field& field, const Triple& target);

/// T1 through the cubic resolvent. Throws kNoPreimage / kMultiplePreimages if
/// the root filter does not leave exactly one candidate.
Triple invert_T1_resolvent(const Field& field, const Triple& target);

/// Full inverse of a permutation family, m <= 7.
class InverseTable {
 public:
  static constexpr unsigned kMaxDegree = 7;

  /// Throws kDomainTooLarge or kNotAPermutation.
  InverseTable(const Field& field, Coeffs coeffs);

  Coeffs coeffs() const { return coeffs_; }
  const Field& field() const { return field_; }
  Triple operator()(const Triple& target) const;

 private:
  Field field_;
  Coeffs coeffs_;
  std::vector<std::uint32_t> preimage_;
};

Triple invert_table(const Field& field, Coeffs coeffs, const Triple& target);

enum class InvertMethod { kAuto, kClosedForm, kResolvent, kTable };

std::string_view to_string(InvertMethod method);
/// "auto", "closed", "closed-form", "resolvent", "table". Throws kInvalidArgument.
InvertMethod parse_invert_method(std::string_view text);

struct Inversion {
  Triple target;
  Triple preimage;
  InvertMethod method;  // never kAuto
};

/// Dispatch on a named family. kAuto picks resolvent for T1, the table for T2
/// and closed form for T3..T5. Throws kInvalidArgument for an unavailable
/// method/family pair.
Inversion invert(const Field& field, std::string_view family, const Triple& target,
                 InvertMethod method = InvertMethod::kAuto);

}  // namespace rotaperm
