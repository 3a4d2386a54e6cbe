#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rotaperm/field.hpp"

namespace rotaperm {

/// Ordered set of single-letter variable names (at most 9). The order fixes
/// the lexicographic term order used for printing and comparison.
class Vars {
 public:
  static constexpr std::size_t kMax = 9;

  Vars() = default;
  /// Throws kInvalidArgument on non-letters, duplicates or more than kMax names.
  explicit Vars(std::string_view names);

  /// x < y < z < a < b < c < t < Y < Z
  static const Vars& standard();

  std::size_t size() const { return size_; }
  char name(std::size_t i) const { return names_[i]; }
  std::string_view names() const { return {names_, size_}; }
  std::optional<std::size_t> index_of(char name) const;

  friend bool operator==(const Vars& a, const Vars& b) { return a.names() == b.names(); }

 private:
  char names_[kMax] = {};
  std::size_t size_ = 0;
};

/// Sparse polynomial over GF(2). Terms are packed exponent vectors kept sorted
/// in descending lexicographic order with no duplicates; every stored term has
/// coefficient 1. Per-variable degree is capped at 63 (kDegreeOverflow).
class MPoly {
 public:
  using Monomial = std::uint64_t;
  static constexpr unsigned kMaxExponent = 63;

  MPoly() : MPoly(Vars::standard()) {}
  explicit MPoly(Vars vars) : vars_(vars) {}

  static MPoly zero(const Vars& vars = Vars::standard()) { return MPoly(vars); }
  static MPoly one(const Vars& vars = Vars::standard());
  static MPoly variable(char name, const Vars& vars = Vars::standard());
  static MPoly monomial(std::span<const unsigned> exponents, const Vars& vars = Vars::standard());

  /// Grammar: poly := term ('+' term)*; term := factor ('*'? factor)*;
  /// factor := VAR ('^' UINT)? | '(' poly ')' ('^' UINT)? | '0' | '1'.
  /// Whitespace is ignored. Throws kSyntaxError (with offset) or kUnknownVariable.
  static MPoly parse(std::string_view text, const Vars& vars = Vars::standard());
  /// Canonical form, e.g. "y^9+y^6*a+c^3"; "0" for the zero polynomial.
  std::string to_text() const;

  const Vars& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::span<const Monomial> terms() const { return terms_; }
  unsigned exponent(Monomial term, std::size_t var) const;
  std::vector<unsigned> exponents(Monomial term) const;
  unsigned total_degree(Monomial term) const;

  unsigned degree_in(char var) const;
  /// d if every term has total degree d; 0 for the zero polynomial.
  std::optional<unsigned> homogeneous_degree() const;
  /// Coefficient of var^k, as a polynomial over the same Vars not involving var.
  MPoly coefficient_in(char var, unsigned k) const;

  MPoly pow(unsigned e) const;
  /// Simultaneous substitution var -> replacement; unlisted variables stay.
  MPoly substitute(const std::map<char, MPoly>& replacement) const;
  /// Throws kMissingAssignment if a variable occurring in the polynomial is unassigned.
  Elem evaluate(const Field& field, const std::map<char, Elem>& assignment) const;

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_vars(const MPoly& other) const;
  static MPoly from_unsorted(Vars vars, std::vector<Monomial> terms);

  Vars vars_;
  std::vector<Monomial> terms_;
};

/// Determinant of the Sylvester matrix of p and q with respect to var,
/// expanded by minors over column subsets. Throws kDegenerateInput when both
/// have degree 0 in var and kDomainTooLarge when the order exceeds 16.
MPoly resultant(const MPoly& p, const MPoly& q, char var);

}  // namespace rotaperm
