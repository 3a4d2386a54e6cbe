#pragma once

// Slow, independent reference arithmetic for the tests. Nothing here calls
// into the library's field code.

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

struct GF {
  unsigned m;
  std::uint32_t modulus;

  std::uint32_t size() const { return 1u << m; }

  // Full carryless product first, then long division by the modulus.
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t prod = 0;
    for (unsigned i = 0; i < 32; ++i) {
      if ((b >> i) & 1u) prod ^= std::uint64_t{a} << i;
    }
    for (int bit = 63; bit >= static_cast<int>(m); --bit) {
      if ((prod >> bit) & 1u) prod ^= std::uint64_t{modulus} << (bit - m);
    }
    return static_cast<std::uint32_t>(prod);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  std::uint32_t trace(std::uint32_t a) const {
    std::uint32_t t = 0, s = a;
    for (unsigned i = 0; i < m; ++i) {
      t ^= s;
      s = mul(s, s);
    }
    return t;
  }

  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t v = 1; v < size(); ++v) {
      if (mul(a, v) == 1) return v;
    }
    return 0;
  }

  std::vector<std::uint32_t> cubic_roots(std::uint32_t p, std::uint32_t q, std::uint32_t r) const {
    std::vector<std::uint32_t> roots;
    for (std::uint32_t y = 0; y < size(); ++y) {
      const std::uint32_t y2 = mul(y, y);
      if ((mul(y2, y) ^ mul(p, y2) ^ mul(q, y) ^ r) == 0) roots.push_back(y);
    }
    return roots;
  }

  std::vector<std::uint32_t> quadratic_roots(std::uint32_t a, std::uint32_t b) const {
    std::vector<std::uint32_t> roots;
    for (std::uint32_t x = 0; x < size(); ++x) {
      if ((mul(x, x) ^ mul(a, x) ^ b) == 0) roots.push_back(x);
    }
    return roots;
  }

  // f = x^3 + a1 y^3 + a2 z^3 + a3 x^2y + a4 xy^2 + a5 x^2z + a6 xz^2 + a7 yz^2 + a8 y^2z,
  // summed monomial by monomial.
  std::uint32_t f(std::uint8_t coeffs, std::uint32_t x, std::uint32_t y, std::uint32_t z) const {
    const std::uint32_t terms[9] = {
        mul(mul(x, x), x), mul(mul(y, y), y), mul(mul(z, z), z),
        mul(mul(x, x), y), mul(x, mul(y, y)), mul(mul(x, x), z),
        mul(x, mul(z, z)), mul(y, mul(z, z)), mul(mul(y, y), z)};
    std::uint32_t v = terms[0];
    for (unsigned i = 1; i <= 8; ++i) {
      if ((coeffs >> (i - 1)) & 1u) v ^= terms[i];
    }
    return v;
  }
};

inline GF gf3() { return {3, 0xB}; }
inline GF gf5() { return {5, 0x25}; }
inline GF gf7() { return {7, 0x83}; }

}  // namespace oracle
