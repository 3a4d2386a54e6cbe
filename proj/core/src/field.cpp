#include "rotaperm/field.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdio>
#include <numeric>

#include "rotaperm/error.hpp"

namespace rotaperm {

namespace {

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  const int db = poly_degree(b);
  for (int da = poly_degree(a); a != 0 && da >= db; da = poly_degree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

std::uint32_t clmul_reduce(std::uint32_t a, std::uint32_t b, unsigned m, std::uint32_t modulus) {
  const std::uint32_t top = 1u << m;
  std::uint32_t r = 0;
  while (b != 0) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus;
  }
  return r;
}

std::uint32_t order_of(std::uint32_t g, unsigned m, std::uint32_t modulus) {
  const std::uint32_t n = (1u << m) - 1;
  std::uint32_t acc = g;
  for (std::uint32_t k = 1; k <= n; ++k) {
    if (acc == 1) return k;
    acc = clmul_reduce(acc, g, m, modulus);
  }
  return 0;
}

}  // namespace

int poly_degree(std::uint32_t poly) { return poly == 0 ? -1 : 31 - std::countl_zero(poly); }

bool is_irreducible(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  for (std::uint32_t div = 2; poly_degree(div) <= d / 2; ++div) {
    if (poly_mod(poly, div) == 0) return false;
  }
  return true;
}

std::optional<std::uint32_t> default_modulus(unsigned m) {
  switch (m) {
    case 1: return 0x3;     // x + 1
    case 2: return 0x7;     // x^2 + x + 1
    case 3: return 0xB;     // x^3 + x + 1
    case 4: return 0x13;    // x^4 + x + 1
    case 5: return 0x25;    // x^5 + x^2 + 1
    case 7: return 0x83;    // x^7 + x + 1
    case 9: return 0x211;   // x^9 + x^4 + 1
    case 11: return 0x805;  // x^11 + x^2 + 1
    default: return std::nullopt;
  }
}

Field::Field(unsigned m, std::optional<std::uint32_t> modulus) {
  if (m < 1 || m > kMaxDegree) {
    fail(ErrorCode::kUnsupportedDegree, "m=" + std::to_string(m) + " outside 1.." +
                                            std::to_string(kMaxDegree));
  }
  if (!modulus) {
    modulus = default_modulus(m);
    if (!modulus) {
      fail(ErrorCode::kUnsupportedDegree,
           "no default modulus for m=" + std::to_string(m) + "; supply one");
    }
  }
  if (poly_degree(*modulus) != static_cast<int>(m)) {
    fail(ErrorCode::kInvalidArgument,
         "modulus " + to_hex(std::uint64_t{*modulus}) + " does not have degree " + std::to_string(m));
  }
  if (!is_irreducible(*modulus)) {
    fail(ErrorCode::kReducibleModulus, "modulus " + to_hex(std::uint64_t{*modulus}) + " is reducible");
  }

  auto impl = std::make_shared<Impl>();
  impl->m = m;
  impl->modulus = *modulus;
  impl->size = 1u << m;
  const std::uint32_t n = impl->size - 1;
  if (m == 1) {
    impl->inv3 = 1;
  } else if (m % 2 == 1) {
    // 2^m - 1 = 1 mod 3 for odd m, so (2(2^m - 1) + 1) / 3 is the inverse.
    impl->inv3 = (2 * n + 1) / 3;
  }

  std::uint32_t g = 1;
  if (n > 1) {
    for (g = 2; g < impl->size; ++g) {
      if (order_of(g, m, *modulus) == n) break;
    }
  }
  impl->generator = g;
  impl->log.assign(impl->size, 0);
  impl->exp.assign(2 * static_cast<std::size_t>(n) + 1, 0);
  std::uint32_t acc = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    impl->exp[k] = acc;
    impl->exp[k + n] = acc;
    impl->log[acc] = k;
    acc = clmul_reduce(acc, g, m, *modulus);
  }
  impl->exp[2 * n] = 1;
  impl_ = std::move(impl);
}

Elem Field::elem(std::uint32_t bits) const {
  if (bits >= size()) {
    fail(ErrorCode::kInvalidArgument,
         to_hex(std::uint64_t{bits}) + " is not an element of GF(2^" + std::to_string(m()) + ")");
  }
  return Elem{bits};
}

Elem Field::mul_reference(Elem a, Elem b) const {
  return Elem{clmul_reduce(a.bits, b.bits, m(), modulus())};
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return Elem{1};
  if (a.is_zero()) return Elem{};
  const std::uint64_t k = (static_cast<std::uint64_t>(log(a)) * (e % group_order())) % group_order();
  return exp(k);
}

Elem Field::inv(Elem a) const {
  if (a.is_zero()) return Elem{};
  return exp(group_order() - log(a));
}

Elem Field::div(Elem a, Elem b) const {
  if (b.is_zero()) fail(ErrorCode::kInvalidArgument, "division by zero");
  return mul(a, inv(b));
}

Elem Field::sqrt(Elem a) const { return pow(a, std::uint64_t{1} << (m() - 1)); }

std::uint32_t Field::log(Elem a) const {
  if (a.is_zero()) fail(ErrorCode::kInvalidArgument, "log of zero");
  return impl_->log[a.bits];
}

Elem Field::cube_root(Elem a) const {
  if (!inv3()) fail(ErrorCode::kOddDegreeRequired, "cube roots are not unique for even m");
  return pow(a, *inv3());
}

Elem Field::trace(Elem a) const {
  Elem t = a;
  Elem s = a;
  for (unsigned i = 1; i < m(); ++i) {
    s = sqr(s);
    t += s;
  }
  return t;
}

Elem Field::half_trace(Elem b) const {
  if (m() % 2 == 0) fail(ErrorCode::kOddDegreeRequired, "half-trace needs odd m");
  if (!trace(b).is_zero()) fail(ErrorCode::kNoSolution, "Tr(b) = 1, z^2 + z = b has no root");
  Elem h = b;
  Elem s = b;
  for (unsigned i = 1; i <= (m() - 1) / 2; ++i) {
    s = sqr(sqr(s));
    h += s;
  }
  return h;
}

std::vector<Elem> Field::solve_quadratic(Elem a, Elem b) const {
  if (a.is_zero()) return {sqrt(b)};
  // x = a u turns x^2 + a x + b into u^2 + u = b / a^2.
  const Elem c = div(b, sqr(a));
  if (!trace(c).is_zero()) return {};
  Elem u;
  if (m() % 2 == 1) {
    u = half_trace(c);
  } else {
    u = Elem{size()};
    for (std::uint32_t v = 0; v < size(); ++v) {
      if (sqr(Elem{v}) + Elem{v} == c) {
        u = Elem{v};
        break;
      }
    }
  }
  std::vector<Elem> roots{mul(a, u), mul(a, u + Elem{1})};
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Elem> Field::cubic_roots(Elem p, Elem q, Elem r) const {
  std::vector<Elem> roots;
  for (std::uint32_t v = 0; v < size(); ++v) {
    const Elem y{v};
    const Elem y2 = sqr(y);
    if (mul(y2, y) + mul(p, y2) + mul(q, y) + r == Elem{}) roots.push_back(y);
  }
  if (p.is_zero() && !r.is_zero()) {
    const bool unique = !trace(div(cube(q), sqr(r)) + Elem{1}).is_zero();
    if (unique != (roots.size() == 1)) {
      fail(ErrorCode::kFormulaInconsistent, "cubic root count disagrees with the trace criterion");
    }
  }
  return roots;
}

std::string to_hex(Elem a) { return to_hex(std::uint64_t{a.bits}); }

std::string to_hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t parse_hex(std::string_view text) {
  std::string_view s = text;
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  if (s.empty() || s.size() > 16) fail(ErrorCode::kSyntaxError, "bad hex literal '" + std::string(text) + "'");
  std::uint64_t v = 0;
  for (char ch : s) {
    const int c = std::tolower(static_cast<unsigned char>(ch));
    int digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else {
      fail(ErrorCode::kSyntaxError, "bad hex literal '" + std::string(text) + "'");
    }
    v = (v << 4) | static_cast<std::uint64_t>(digit);
  }
  return v;
}

Elem parse_elem(const Field& field, std::string_view text) {
  const std::uint64_t v = parse_hex(text);
  if (v >= field.size()) {
    fail(ErrorCode::kInvalidArgument,
         std::string(text) + " is not an element of GF(2^" + std::to_string(field.m()) + ")");
  }
  return Elem{static_cast<std::uint32_t>(v)};
}

}  // namespace rotaperm
