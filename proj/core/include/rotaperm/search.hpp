#pragma once

#include <map>
#include <span>
#include <vector>

#include "rotaperm/family.hpp"
#include "rotaperm/field.hpp"

namespace rotaperm {

struct SearchReport {
  std::vector<unsigned> ms;
  /// Per m, the permutation vectors sorted by bitstring.
  std::map<unsigned, std::vector<Coeffs>> results;
  std::vector<Coeffs> intersection;
  std::map<unsigned, bool> contains_five_families;
};

inline constexpr unsigned kMaxSearchDegree = 7;

/// Which of the 256 coefficient vectors give permutations of GF(2^m)^3.
/// Throws kEvenDegree for even m and kDomainTooLarge above m = 7 (m = 9 with allow_m9).
std::vector<Coeffs> search_m(const Field& field, bool allow_m9 = false);

SearchReport search_all(std::span<const unsigned> ms, bool allow_m9 = false);

/// Vectors in the intersection other than the five named families and 00000000.
/// Needs at least two values of m (kInvalidArgument).
std::vector<Coeffs> search_diff(const SearchReport& report);

/// Sorted by bitstring a1..a8.
void sort_by_bitstring(std::vector<Coeffs>& v);

}  // namespace rotaperm
