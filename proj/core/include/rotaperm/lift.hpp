#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "rotaperm/family.hpp"
#include "rotaperm/field.hpp"

namespace rotaperm {

/// Element x + y w + z w^2 of GF(2^3m), stored as the point index of (x, y, z)
/// (x in the top m bits). Addition is XOR.
struct ExtElem {
  std::uint32_t bits = 0;

  constexpr bool is_zero() const { return bits == 0; }
  friend constexpr bool operator==(ExtElem, ExtElem) = default;
  friend constexpr auto operator<=>(ExtElem, ExtElem) = default;
};

constexpr ExtElem operator+(ExtElem a, ExtElem b) { return ExtElem{a.bits ^ b.bits}; }
constexpr ExtElem& operator+=(ExtElem& a, ExtElem b) {
  a.bits ^= b.bits;
  return a;
}

/// GF(2^3m) = GF(2^m)[w] / (w^3 + alpha w^2 + beta w + gamma).
class ExtField {
 public:
  static constexpr unsigned kMaxBaseDegree = 10;
  /// Discrete-log tables are built up to this base degree.
  static constexpr unsigned kMaxTableDegree = 5;

  /// The first monic cubic (alpha, beta, gamma in lexicographic order) with no
  /// root in the base field. Throws kDomainTooLarge for m > 10.
  explicit ExtField(const Field& base);

  const Field& base() const { return impl_->base; }
  /// {gamma, beta, alpha, 1}
  std::array<Elem, 4> cubic() const;
  /// 2^3m
  std::uint64_t size() const { return impl_->size; }
  std::uint64_t group_order() const { return impl_->size - 1; }
  bool has_tables() const { return !impl_->log.empty(); }

  ExtElem from_coords(const Triple& t) const;
  Triple coords(ExtElem e) const;
  ExtElem from_base(Elem a) const { return from_coords({a, Elem{}, Elem{}}); }
  ExtElem one() const { return from_base(Elem{1}); }
  ExtElem omega() const { return from_coords({Elem{}, Elem{1}, Elem{}}); }

  ExtElem mul(ExtElem a, ExtElem b) const;
  /// Schoolbook multiplication with reduction by the cubic; the tables come from it.
  ExtElem mul_reference(ExtElem a, ExtElem b) const;
  ExtElem pow(ExtElem a, std::uint64_t e) const;
  /// inv(0) = 0
  ExtElem inv(ExtElem a) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(ExtElem a) const;
  bool is_primitive(ExtElem a) const { return !a.is_zero() && order(a) == group_order(); }
  /// Log-table base; only with tables.
  ExtElem generator() const;
  /// Discrete log base generator(); needs tables and a nonzero argument.
  std::uint64_t log(ExtElem a) const;
  ExtElem exp(std::uint64_t k) const;

 private:
  struct Impl {
    Field base;
    Elem alpha, beta, gamma;
    std::uint64_t size = 0;
    std::vector<std::uint64_t> order_primes;
    std::uint32_t generator = 0;
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> exp;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Sparse univariate polynomial over GF(2^3m) of degree < 2^3m, ascending exponents.
class LiftedPoly {
 public:
  struct Term {
    std::uint64_t e = 0;
    ExtElem c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LiftedPoly() = default;
  /// Reduces exponents (e > 0 maps into [1, N-1]), merges equal exponents and drops zeros.
  static LiftedPoly from_terms(const ExtField& ext, std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::optional<ExtElem> coefficient(std::uint64_t e) const;

  friend bool operator==(const LiftedPoly&, const LiftedPoly&) = default;

 private:
  std::vector<Term> terms_;
};

/// e > 0 goes to ((e - 1) mod (N - 1)) + 1; 0 stays 0.
std::uint64_t reduce_exponent(const ExtField& ext, std::uint64_t e);

/// Unique polynomial of degree < N with p(t) = values[t.bits] for every t.
LiftedPoly interpolate(const ExtField& ext, const std::vector<ExtElem>& values);

inline constexpr unsigned kMaxLiftDegree = 5;

/// F'(x + y w + z w^2) = f1 + f2 w + f3 w^2. Bijectivity is not checked here
/// (see is_pp). Throws kDomainTooLarge for m > 5.
LiftedPoly lift_permutation(const ExtField& ext, Coeffs coeffs);

ExtElem evaluate(const ExtField& ext, const LiftedPoly& p, ExtElem t);

/// Sorted exponents.
std::vector<std::uint64_t> support(const LiftedPoly& p);

/// Exhaustive bijectivity test. Throws kDomainTooLarge for m > 5.
bool is_pp(const ExtField& ext, const LiftedPoly& p);

/// P(X) = a Q(c X^d)
struct QmWitness {
  ExtElem a;
  ExtElem c;
  std::uint64_t d = 1;
};

/// a Q(c X^d) as a reduced polynomial.
LiftedPoly qm_transform(const ExtField& ext, const LiftedPoly& q, const QmWitness& w);

/// Witness for P(X) = a Q(c X^d) or nullopt after exhausting every d with
/// gcd(d, N - 1) = 1. Needs tables (kDomainTooLarge otherwise).
std::optional<QmWitness> qm_equivalent(const ExtField& ext, const LiftedPoly& p, const LiftedPoly& q);

/// The witness for Q in terms of P: (a^-1, c^-d', d') with d' = d^-1 mod N - 1.
QmWitness invert_witness(const ExtField& ext, const QmWitness& w);

}  // namespace rotaperm
