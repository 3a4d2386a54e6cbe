#include "rotaperm/mpoly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <unordered_map>

#include "rotaperm/error.hpp"

namespace rotaperm {

namespace {

constexpr unsigned kFieldBits = 7;
constexpr std::uint64_t kFieldMask = (1u << kFieldBits) - 1;

constexpr unsigned shift_of(std::size_t var) {
  return static_cast<unsigned>(kFieldBits * (Vars::kMax - 1 - var));
}

// Bit 6 of every field. Fields hold values <= 63, so a sum of two fields
// never carries into the neighbour; a set guard bit means overflow.
constexpr std::uint64_t guard_mask() {
  std::uint64_t g = 0;
  for (std::size_t i = 0; i < Vars::kMax; ++i) g |= std::uint64_t{1} << (shift_of(i) + kFieldBits - 1);
  return g;
}
constexpr std::uint64_t kGuardMask = guard_mask();

MPoly::Monomial mono_mul(MPoly::Monomial a, MPoly::Monomial b) {
  const MPoly::Monomial s = a + b;
  if (s & kGuardMask) {
    fail(ErrorCode::kDegreeOverflow, "exponent exceeds " + std::to_string(MPoly::kMaxExponent));
  }
  return s;
}

void cancel_pairs(std::vector<MPoly::Monomial>& terms) {
  std::sort(terms.begin(), terms.end(), std::greater<>());
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) terms[out++] = terms[i];
    i = j;
  }
  terms.resize(out);
}

class Parser {
 public:
  Parser(std::string_view text, const Vars& vars) : text_(text), vars_(vars) {}

  MPoly run() {
    MPoly p = poly();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorCode::kSyntaxError, msg + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  unsigned uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      error("expected an unsigned integer");
    }
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
      if (v > 1'000'000) error("exponent too large");
    }
    return static_cast<unsigned>(v);
  }

  MPoly poly() {
    MPoly acc = term();
    while (peek('+')) {
      ++pos_;
      acc += term();
    }
    return acc;
  }

  MPoly term() {
    if (!starts_factor()) error("expected a term");
    MPoly acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  MPoly factor() {
    skip_ws();
    if (pos_ >= text_.size()) error("expected a factor");
    const char c = text_[pos_];
    MPoly base(vars_);
    if (c == '(') {
      ++pos_;
      base = poly();
      if (!peek(')')) error("expected ')'");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      const unsigned v = uint();
      if (v > 1 || pos_ - start != 1) {
        pos_ = start;
        error("only the constants 0 and 1 are allowed");
      }
      base = v == 1 ? MPoly::one(vars_) : MPoly::zero(vars_);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      if (!vars_.index_of(c)) {
        fail(ErrorCode::kUnknownVariable,
             std::string("'") + c + "' at offset " + std::to_string(pos_) + " is not one of " +
                 std::string(vars_.names()));
      }
      ++pos_;
      base = MPoly::variable(c, vars_);
    } else {
      error("unexpected '" + std::string(1, c) + "'");
    }
    if (peek('^')) {
      ++pos_;
      return base.pow(uint());
    }
    return base;
  }

  std::string_view text_;
  const Vars& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Vars::Vars(std::string_view names) {
  if (names.size() > kMax) fail(ErrorCode::kInvalidArgument, "at most 9 variables are supported");
  for (char c : names) {
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      fail(ErrorCode::kInvalidArgument, std::string("variable '") + c + "' is not a letter");
    }
    if (index_of(c)) fail(ErrorCode::kInvalidArgument, std::string("duplicate variable '") + c + "'");
    names_[size_++] = c;
  }
}

const Vars& Vars::standard() {
  static const Vars vars("xyzabctYZ");
  return vars;
}

std::optional<std::size_t> Vars::index_of(char name) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

MPoly MPoly::one(const Vars& vars) {
  MPoly p(vars);
  p.terms_.push_back(0);
  return p;
}

MPoly MPoly::variable(char name, const Vars& vars) {
  const auto idx = vars.index_of(name);
  if (!idx) fail(ErrorCode::kUnknownVariable, std::string("'") + name + "' is not one of " + std::string(vars.names()));
  MPoly p(vars);
  p.terms_.push_back(Monomial{1} << shift_of(*idx));
  return p;
}

MPoly MPoly::monomial(std::span<const unsigned> exponents, const Vars& vars) {
  if (exponents.size() != vars.size()) fail(ErrorCode::kInvalidArgument, "exponent vector arity mismatch");
  Monomial m = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > kMaxExponent) fail(ErrorCode::kDegreeOverflow, "exponent exceeds 63");
    m |= Monomial{exponents[i]} << shift_of(i);
  }
  MPoly p(vars);
  p.terms_.push_back(m);
  return p;
}

MPoly MPoly::parse(std::string_view text, const Vars& vars) { return Parser(text, vars).run(); }

std::string MPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    if (t) out += '+';
    bool first = true;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      const unsigned e = exponent(terms_[t], v);
      if (e == 0) continue;
      if (!first) out += '*';
      first = false;
      out += vars_.name(v);
      if (e > 1) out += '^' + std::to_string(e);
    }
    if (first) out += '1';
  }
  return out;
}

unsigned MPoly::exponent(Monomial term, std::size_t var) const {
  return static_cast<unsigned>((term >> shift_of(var)) & kFieldMask);
}

std::vector<unsigned> MPoly::exponents(Monomial term) const {
  std::vector<unsigned> e(vars_.size());
  for (std::size_t v = 0; v < vars_.size(); ++v) e[v] = exponent(term, v);
  return e;
}

unsigned MPoly::total_degree(Monomial term) const {
  unsigned d = 0;
  for (std::size_t v = 0; v < vars_.size(); ++v) d += exponent(term, v);
  return d;
}

unsigned MPoly::degree_in(char var) const {
  const auto idx = vars_.index_of(var);
  if (!idx) fail(ErrorCode::kUnknownVariable, std::string("'") + var + "'");
  unsigned d = 0;
  for (Monomial t : terms_) d = std::max(d, exponent(t, *idx));
  return d;
}

std::optional<unsigned> MPoly::homogeneous_degree() const {
  if (terms_.empty()) return 0u;
  const unsigned d = total_degree(terms_.front());
  for (Monomial t : terms_) {
    if (total_degree(t) != d) return std::nullopt;
  }
  return d;
}

MPoly MPoly::coefficient_in(char var, unsigned k) const {
  const auto idx = vars_.index_of(var);
  if (!idx) fail(ErrorCode::kUnknownVariable, std::string("'") + var + "'");
  const Monomial clear = ~(kFieldMask << shift_of(*idx));
  std::vector<Monomial> out;
  for (Monomial t : terms_) {
    if (exponent(t, *idx) == k) out.push_back(t & clear);
  }
  return from_unsorted(vars_, std::move(out));
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = one(vars_);
  MPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MPoly MPoly::substitute(const std::map<char, MPoly>& replacement) const {
  std::vector<const MPoly*> rep(vars_.size(), nullptr);
  for (const auto& [name, poly] : replacement) {
    const auto idx = vars_.index_of(name);
    if (!idx) fail(ErrorCode::kUnknownVariable, std::string("'") + name + "'");
    check_same_vars(poly);
    rep[*idx] = &poly;
  }
  // powers[v][e] = rep[v]^e, filled lazily.
  std::vector<std::vector<MPoly>> powers(vars_.size());
  auto power = [&](std::size_t v, unsigned e) -> const MPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(one(vars_));
    while (cache.size() <= e) cache.push_back(cache.back() * *rep[v]);
    return cache[e];
  };

  MPoly out(vars_);
  for (Monomial t : terms_) {
    Monomial kept = 0;
    MPoly product = one(vars_);
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      const unsigned e = exponent(t, v);
      if (e == 0) continue;
      if (rep[v]) {
        product *= power(v, e);
      } else {
        kept |= Monomial{e} << shift_of(v);
      }
    }
    MPoly kept_poly(vars_);
    kept_poly.terms_.push_back(kept);
    out += product * kept_poly;
  }
  return out;
}

Elem MPoly::evaluate(const Field& field, const std::map<char, Elem>& assignment) const {
  std::vector<unsigned> max_exp(vars_.size(), 0);
  for (Monomial t : terms_) {
    for (std::size_t v = 0; v < vars_.size(); ++v) max_exp[v] = std::max(max_exp[v], exponent(t, v));
  }
  std::vector<std::vector<Elem>> powers(vars_.size());
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    if (max_exp[v] == 0) continue;
    const auto it = assignment.find(vars_.name(v));
    if (it == assignment.end()) {
      fail(ErrorCode::kMissingAssignment, std::string("no value for '") + vars_.name(v) + "'");
    }
    if (!field.contains(it->second)) fail(ErrorCode::kInvalidArgument, "assigned value outside the field");
    powers[v].resize(max_exp[v] + 1);
    powers[v][0] = Elem{1};
    for (unsigned e = 1; e <= max_exp[v]; ++e) powers[v][e] = field.mul(powers[v][e - 1], it->second);
  }
  Elem sum;
  for (Monomial t : terms_) {
    Elem prod{1};
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      const unsigned e = exponent(t, v);
      if (e) prod = field.mul(prod, powers[v][e]);
    }
    sum += prod;
  }
  return sum;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  check_same_vars(rhs);
  std::vector<Monomial> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    if (terms_[i] > rhs.terms_[j]) {
      out.push_back(terms_[i++]);
    } else if (terms_[i] < rhs.terms_[j]) {
      out.push_back(rhs.terms_[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  out.insert(out.end(), rhs.terms_.begin() + static_cast<std::ptrdiff_t>(j), rhs.terms_.end());
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_same_vars(b);
  if (a.is_zero() || b.is_zero()) return MPoly(a.vars_);
  std::vector<MPoly::Monomial> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (auto s : a.terms_) {
    for (auto t : b.terms_) out.push_back(mono_mul(s, t));
  }
  return MPoly::from_unsorted(a.vars_, std::move(out));
}

void MPoly::check_same_vars(const MPoly& other) const {
  if (!(vars_ == other.vars_)) {
    fail(ErrorCode::kVariableMismatch,
         "[" + std::string(vars_.names()) + "] vs [" + std::string(other.vars_.names()) + "]");
  }
}

MPoly MPoly::from_unsorted(Vars vars, std::vector<Monomial> terms) {
  cancel_pairs(terms);
  MPoly p(vars);
  p.terms_ = std::move(terms);
  return p;
}

MPoly resultant(const MPoly& p, const MPoly& q, char var) {
  if (!(p.vars() == q.vars())) {
    fail(ErrorCode::kVariableMismatch, "resultant operands use different variable sets");
  }
  const unsigned n = p.degree_in(var);
  const unsigned m = q.degree_in(var);
  if (n == 0 && m == 0) {
    fail(ErrorCode::kDegenerateInput, std::string("both polynomials have degree 0 in '") + var + "'");
  }
  const unsigned order = n + m;
  if (order > 16) fail(ErrorCode::kDomainTooLarge, "Sylvester matrix order above 16");

  const Vars& vars = p.vars();
  // Row r holds the coefficients from the leading one down, shifted right by r.
  std::vector<std::vector<MPoly>> rows(order, std::vector<MPoly>(order, MPoly(vars)));
  for (unsigned r = 0; r < m; ++r) {
    for (unsigned k = 0; k <= n; ++k) rows[r][r + k] = p.coefficient_in(var, n - k);
  }
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned k = 0; k <= m; ++k) rows[m + r][r + k] = q.coefficient_in(var, m - k);
  }

  // Over GF(2) the determinant equals the permanent, so minor expansion along
  // rows needs no signs. memo[used] is the permanent of the remaining rows
  // restricted to the unused columns.
  const std::uint32_t full = (order == 32) ? ~0u : ((1u << order) - 1);
  std::unordered_map<std::uint32_t, MPoly> memo;
  std::function<MPoly(std::uint32_t)> expand = [&](std::uint32_t used) -> MPoly {
    if (used == full) return MPoly::one(vars);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    const auto row = static_cast<unsigned>(std::popcount(used));
    MPoly acc(vars);
    for (unsigned col = 0; col < order; ++col) {
      if ((used >> col) & 1u) continue;
      const MPoly& entry = rows[row][col];
      if (entry.is_zero()) continue;
      const MPoly minor = expand(used | (1u << col));
      if (!minor.is_zero()) acc += entry * minor;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return expand(0);
}

}  // namespace rotaperm
