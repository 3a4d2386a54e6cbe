#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "rotaperm/family.hpp"
#include "rotaperm/field.hpp"

namespace rotaperm {

struct PermReport {
  Coeffs coeffs;
  unsigned m = 0;
  bool is_permutation = false;
  /// Lexicographically first collision (earlier point, later point).
  std::optional<std::pair<Triple, Triple>> witness;
  std::uint64_t points_checked = 0;
};

inline constexpr unsigned kMaxPermcheckDegree = 9;

/// Points are enumerated in (x, y, z) bit-pattern order: index = x<<2m | y<<m | z.
std::uint64_t point_index(const Field& field, const Triple& p);
Triple point_at(const Field& field, std::uint64_t index);

/// Exhaustive bijectivity test over all 2^3m points. Throws kDomainTooLarge for m > 9.
PermReport is_permutation(const Field& field, Coeffs coeffs);
inline PermReport is_permutation(const Field& field, const FamilySpec& fam) {
  return is_permutation(field, fam.coeffs);
}

/// True iff F(v + s) != F(v) for every v and every nonzero shift s. m = 3 only.
bool difference_check(const Field& field, Coeffs coeffs);
inline bool difference_check(const Field& field, const FamilySpec& fam) {
  return difference_check(field, fam.coeffs);
}

/// Number of (Y, Z) with D(Y, Z) = 0, where D is the normalized resultant of
/// the T2 difference system at ratio t = b/a.
std::uint64_t count_zeros_D(const Field& field, Elem t);

}  // namespace rotaperm
