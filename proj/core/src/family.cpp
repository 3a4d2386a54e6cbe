#include "rotaperm/family.hpp"

#include <numeric>

#include "rotaperm/error.hpp"

namespace rotaperm {

namespace {

// Optional monomials of f in coefficient order a1..a8.
constexpr std::array<std::string_view, 8> kMonomialText{
    "y^3", "z^3", "x^2*y", "x*y^2", "x^2*z", "x*z^2", "y*z^2", "y^2*z"};

constexpr std::array<std::pair<std::string_view, std::uint8_t>, 5> kNamed{{
    {"T1", 0b01011001},  // 10011010: x^3+y^3+x^2z+xy^2+yz^2
    {"T2", 0b01011100},  // 00111010: x^3+x^2y+xy^2+x^2z+yz^2
    {"T3", 0b11000000},  // 00000011: x^3+yz^2+y^2z
    {"T4", 0b01010101},  // 10101010: x^3+y^3+x^2y+x^2z+yz^2
    {"T5", 0b00111100},  // 00111100: x^3+x^2y+xy^2+x^2z+xz^2
}};

}  // namespace

Coeffs Coeffs::parse(std::string_view bits) {
  if (bits.size() != 8) fail(ErrorCode::kSyntaxError, "coefficient vector must have 8 characters");
  std::uint8_t mask = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    if (bits[i] == '1') {
      mask |= static_cast<std::uint8_t>(1u << i);
    } else if (bits[i] != '0') {
      fail(ErrorCode::kSyntaxError, "coefficient vector must contain only 0 and 1");
    }
  }
  return Coeffs(mask);
}

std::string Coeffs::to_bitstring() const {
  std::string s(8, '0');
  for (unsigned i = 1; i <= 8; ++i) {
    if (a(i)) s[i - 1] = '1';
  }
  return s;
}

MPoly rotate_vars(const MPoly& p, unsigned k) {
  const Vars& v = p.vars();
  MPoly out = p;
  for (unsigned i = 0; i < k % 3; ++i) {
    out = out.substitute({{'x', MPoly::variable('y', v)},
                          {'y', MPoly::variable('z', v)},
                          {'z', MPoly::variable('x', v)}});
  }
  return out;
}

FamilySpec family_from_coeffs(Coeffs coeffs) {
  MPoly f = MPoly::parse("x^3");
  for (unsigned i = 1; i <= 8; ++i) {
    if (coeffs.a(i)) f += MPoly::parse(kMonomialText[i - 1]);
  }
  FamilySpec spec{coeffs, f, {f, rotate_vars(f, 1), rotate_vars(f, 2)}, std::nullopt};
  for (const auto& [name, mask] : kNamed) {
    if (mask == coeffs.mask()) spec.name = std::string(name);
  }
  return spec;
}

Coeffs named_coeffs(std::string_view name) {
  for (const auto& [n, mask] : kNamed) {
    if (n == name) return Coeffs(mask);
  }
  fail(ErrorCode::kUnknownName, "no family named '" + std::string(name) + "' (expected T1..T5)");
}

FamilySpec named_family(std::string_view name) { return family_from_coeffs(named_coeffs(name)); }

Triple eval_F(const Field& field, Coeffs coeffs, const Triple& p) {
  auto f = [&](Elem x, Elem y, Elem z) {
    const Elem x2 = field.sqr(x), y2 = field.sqr(y), z2 = field.sqr(z);
    Elem r = field.mul(x2, x);
    if (coeffs.a(1)) r += field.mul(y2, y);
    if (coeffs.a(2)) r += field.mul(z2, z);
    if (coeffs.a(3)) r += field.mul(x2, y);
    if (coeffs.a(4)) r += field.mul(x, y2);
    if (coeffs.a(5)) r += field.mul(x2, z);
    if (coeffs.a(6)) r += field.mul(x, z2);
    if (coeffs.a(7)) r += field.mul(y, z2);
    if (coeffs.a(8)) r += field.mul(y2, z);
    return r;
  };
  return {f(p.x, p.y, p.z), f(p.y, p.z, p.x), f(p.z, p.x, p.y)};
}

bool is_rotatable(const Components& F) {
  return F[1] == rotate_vars(F[0], 1) && F[2] == rotate_vars(F[0], 2);
}

bool necessary_condition(std::uint64_t d, std::uint64_t q) {
  if (q < 2 || (q & (q - 1)) != 0) fail(ErrorCode::kInvalidArgument, "q must be a power of 2");
  return std::gcd(d, q - 1) == 1;
}

Components li_nikolay_F1() {
  return {MPoly::parse("x^3+x^2*z+y*z^2"), MPoly::parse("x^2*z+y^3"),
          MPoly::parse("x*y^2+y^2*z+z^3")};
}

Components li_nikolay_F2() {
  return {MPoly::parse("x^3+x*y^2+y*z^2"), MPoly::parse("x*y^2+z^3"),
          MPoly::parse("x^2*z+y^3+y^2*z")};
}

}  // namespace rotaperm
