#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rotaperm/field.hpp"
#include "rotaperm/mpoly.hpp"

namespace rotaperm {

/// The eight GF(2) coefficients a1..a8 of
///   f = x^3 + a1 y^3 + a2 z^3 + a3 x^2y + a4 xy^2 + a5 x^2z + a6 xz^2 + a7 yz^2 + a8 y^2z.
/// Bit i-1 holds a_i.
class Coeffs {
 public:
  constexpr Coeffs() = default;
  constexpr explicit Coeffs(std::uint8_t mask) : mask_(mask) {}
  /// From "a1a2...a8"; throws kSyntaxError.
  static Coeffs parse(std::string_view bits);

  constexpr std::uint8_t mask() const { return mask_; }
  /// a_i for i in 1..8
  constexpr bool a(unsigned i) const { return (mask_ >> (i - 1)) & 1u; }
  std::string to_bitstring() const;

  friend constexpr bool operator==(Coeffs, Coeffs) = default;
  friend constexpr auto operator<=>(Coeffs, Coeffs) = default;

 private:
  std::uint8_t mask_ = 0;
};

using Components = std::array<MPoly, 3>;

/// A rotatable 3-homogeneous candidate F = (f(x,y,z), f(y,z,x), f(z,x,y)).
struct FamilySpec {
  Coeffs coeffs;
  MPoly f;
  Components F;
  std::optional<std::string> name;
};

FamilySpec family_from_coeffs(Coeffs coeffs);

/// T1..T5, the five proven families. Throws kUnknownName.
FamilySpec named_family(std::string_view name);
inline constexpr std::array<std::string_view, 5> kNamedFamilies{"T1", "T2", "T3", "T4", "T5"};
Coeffs named_coeffs(std::string_view name);

/// Numeric image of p under F. Works for any m; only odd m can give permutations.
Triple eval_F(const Field& field, Coeffs coeffs, const Triple& p);
inline Triple eval_F(const Field& field, const FamilySpec& fam, const Triple& p) {
  return eval_F(field, fam.coeffs, p);
}

/// The substitution x -> y, y -> z, z -> x applied k times.
MPoly rotate_vars(const MPoly& p, unsigned k = 1);

/// True iff component i+1 equals component 1 under the i-fold rotation.
bool is_rotatable(const Components& F);

/// gcd(d, q - 1) == 1, i.e. d-homogeneity does not rule out a permutation.
bool necessary_condition(std::uint64_t d, std::uint64_t q);

/// Li-Nikolay APN permutations, kept as literal triples for cross-checks.
Components li_nikolay_F1();
Components li_nikolay_F2();

}  // namespace rotaperm
