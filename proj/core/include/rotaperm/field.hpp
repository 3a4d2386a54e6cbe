#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rotaperm {

/// Element of GF(2^m) as a little-endian bit-polynomial (bit i is the
/// coefficient of x^i). Addition is XOR and needs no field context.
struct Elem {
  std::uint32_t bits = 0;

  constexpr bool is_zero() const { return bits == 0; }
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

constexpr Elem operator+(Elem a, Elem b) { return Elem{a.bits ^ b.bits}; }
constexpr Elem& operator+=(Elem& a, Elem b) {
  a.bits ^= b.bits;
  return a;
}

/// A point of GF(2^m)^3.
struct Triple {
  Elem x, y, z;

  friend constexpr bool operator==(const Triple&, const Triple&) = default;
  friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

/// (x, y, z) -> (y, z, x)
constexpr Triple rotate(const Triple& p) { return {p.y, p.z, p.x}; }

/// Trial division by every polynomial of degree 1..deg/2.
bool is_irreducible(std::uint32_t poly);

/// Degree of a nonzero bit-polynomial.
int poly_degree(std::uint32_t poly);

/// Default modulus for m, if the shipped table has one.
std::optional<std::uint32_t> default_modulus(unsigned m);

/// Immutable GF(2^m) context, 1 <= m <= 16. Copies share the same tables and
/// are safe to use from any number of threads.
class Field {
 public:
  static constexpr unsigned kMaxDegree = 16;

  /// Throws kReducibleModulus, kUnsupportedDegree or kInvalidArgument.
  explicit Field(unsigned m, std::optional<std::uint32_t> modulus = std::nullopt);

  unsigned m() const { return impl_->m; }
  std::uint32_t modulus() const { return impl_->modulus; }
  /// 2^m
  std::uint32_t size() const { return impl_->size; }
  /// 2^m - 1
  std::uint32_t group_order() const { return impl_->size - 1; }
  /// s with 3s = 1 mod 2^m - 1; present iff m is odd.
  std::optional<std::uint32_t> inv3() const { return impl_->inv3; }
  /// A fixed primitive element (the base of the log tables).
  Elem generator() const { return Elem{impl_->generator}; }

  /// Validates that bits < 2^m.
  Elem elem(std::uint32_t bits) const;
  bool contains(Elem a) const { return a.bits < impl_->size; }

  Elem mul(Elem a, Elem b) const {
    if (a.bits == 0 || b.bits == 0) return Elem{};
    return Elem{impl_->exp[impl_->log[a.bits] + impl_->log[b.bits]]};
  }
  /// Shift-and-XOR multiply with modular reduction; the tables are built from it.
  Elem mul_reference(Elem a, Elem b) const;
  Elem sqr(Elem a) const { return mul(a, a); }
  Elem cube(Elem a) const { return mul(a, mul(a, a)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// a^(2^m - 2); inv(0) = 0.
  Elem inv(Elem a) const;
  /// Throws kInvalidArgument on division by zero.
  Elem div(Elem a, Elem b) const;
  /// Unique square root a^(2^(m-1)).
  Elem sqrt(Elem a) const;
  /// Discrete log base generator(); a must be nonzero.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t k) const { return Elem{impl_->exp[k % group_order()]}; }

  /// a^(1/3); throws kOddDegreeRequired for even m.
  Elem cube_root(Elem a) const;
  /// Absolute trace to GF(2), returned as the field element 0 or 1.
  Elem trace(Elem a) const;
  /// H(b) with H(b)^2 + H(b) = b; m odd and Tr(b) = 0 (kNoSolution otherwise).
  Elem half_trace(Elem b) const;

  /// All roots of x^2 + a x + b, ascending.
  std::vector<Elem> solve_quadratic(Elem a, Elem b) const;
  /// All roots of Y^3 + p Y^2 + q Y + r by exhaustive scan, ascending.
  std::vector<Elem> cubic_roots(Elem p, Elem q, Elem r) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.m() == b.m() && a.modulus() == b.modulus();
  }

 private:
  struct Impl {
    unsigned m = 0;
    std::uint32_t modulus = 0;
    std::uint32_t size = 0;
    std::optional<std::uint32_t> inv3;
    std::uint32_t generator = 0;
    std::vector<std::uint32_t> log;
    // Doubled so that exp[log a + log b] never needs a reduction.
    std::vector<std::uint32_t> exp;
  };
  std::shared_ptr<const Impl> impl_;
};

/// "0x5" for x^2 + 1.
std::string to_hex(Elem a);
std::string to_hex(std::uint64_t v);
/// Accepts "0x..." or bare hex digits. Throws kSyntaxError.
std::uint64_t parse_hex(std::string_view text);
/// Parses and range-checks against the field.
Elem parse_elem(const Field& field, std::string_view text);

}  // namespace rotaperm
