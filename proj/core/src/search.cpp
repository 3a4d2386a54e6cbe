#include "rotaperm/search.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "rotaperm/error.hpp"
#include "rotaperm/parallel.hpp"
#include "rotaperm/permcheck.hpp"

namespace rotaperm {

namespace {

// Table-driven scan for m <= 7: every monomial of f is precomputed at every
// point once, so each family costs a handful of XORs per point.
std::vector<Coeffs> fast_scan(const Field& f) {
  const unsigned m = f.m();
  const std::uint32_t q = f.size();
  const std::uint32_t points = q * q * q;
  const std::uint32_t mask = points - 1;

  // x^3, then a1..a8 monomials y^3, z^3, x^2y, xy^2, x^2z, xz^2, yz^2, y^2z.
  std::array<std::vector<std::uint8_t>, 9> mono;
  for (auto& v : mono) v.resize(points);
  for (std::uint32_t idx = 0; idx < points; ++idx) {
    const Triple p = point_at(f, idx);
    const Elem x2 = f.sqr(p.x), y2 = f.sqr(p.y), z2 = f.sqr(p.z);
    const Elem vals[9] = {f.mul(x2, p.x), f.mul(y2, p.y), f.mul(z2, p.z), f.mul(x2, p.y), f.mul(p.x, y2),
                          f.mul(x2, p.z), f.mul(p.x, z2), f.mul(p.y, z2), f.mul(y2, p.z)};
    for (int i = 0; i < 9; ++i) mono[i][idx] = static_cast<std::uint8_t>(vals[i].bits);
  }

  std::vector<char> perm(256, 0);
  parallel_for(256, [&](std::size_t mask_bits) {
    std::vector<std::uint8_t> fv(mono[0]);
    for (unsigned i = 1; i <= 8; ++i) {
      if (!((mask_bits >> (i - 1)) & 1u)) continue;
      const auto& src = mono[i];
      for (std::uint32_t idx = 0; idx < points; ++idx) fv[idx] ^= src[idx];
    }
    std::vector<std::uint64_t> seen((points + 63) / 64, 0);
    for (std::uint32_t idx = 0; idx < points; ++idx) {
      const std::uint32_t r1 = ((idx << m) & mask) | (idx >> (2 * m));  // (y, z, x)
      const std::uint32_t r2 = ((r1 << m) & mask) | (r1 >> (2 * m));    // (z, x, y)
      const std::uint32_t img = (std::uint32_t{fv[idx]} << (2 * m)) | (std::uint32_t{fv[r1]} << m) | fv[r2];
      const std::uint64_t bit = std::uint64_t{1} << (img % 64);
      if (seen[img / 64] & bit) return;
      seen[img / 64] |= bit;
    }
    perm[mask_bits] = 1;
  });

  std::vector<Coeffs> out;
  for (unsigned i = 0; i < 256; ++i) {
    if (perm[i]) out.emplace_back(static_cast<std::uint8_t>(i));
  }
  return out;
}

}  // namespace

void sort_by_bitstring(std::vector<Coeffs>& v) {
  std::sort(v.begin(), v.end(),
            [](Coeffs a, Coeffs b) { return a.to_bitstring() < b.to_bitstring(); });
}

std::vector<Coeffs> search_m(const Field& field, bool allow_m9) {
  const unsigned m = field.m();
  if (m % 2 == 0) fail(ErrorCode::kEvenDegree, "search needs odd m (got " + std::to_string(m) + ")");
  if (m > kMaxSearchDegree && !(allow_m9 && m == 9)) {
    fail(ErrorCode::kDomainTooLarge, "search is limited to m <= 7 (m = 9 behind a flag)");
  }
  std::vector<Coeffs> out;
  if (m <= kMaxSearchDegree) {
    out = fast_scan(field);
  } else {
    for (unsigned i = 0; i < 256; ++i) {
      const Coeffs c(static_cast<std::uint8_t>(i));
      if (is_permutation(field, c).is_permutation) out.push_back(c);
    }
  }
  sort_by_bitstring(out);
  return out;
}

SearchReport search_all(std::span<const unsigned> ms, bool allow_m9) {
  SearchReport report;
  for (unsigned m : ms) {
    if (m % 2 == 0) fail(ErrorCode::kEvenDegree, "search needs odd m (got " + std::to_string(m) + ")");
    if (m > kMaxSearchDegree && !(allow_m9 && m == 9)) {
      fail(ErrorCode::kDomainTooLarge, "search is limited to m <= 7 (m = 9 behind a flag)");
    }
  }
  for (unsigned m : ms) {
    if (report.results.count(m)) continue;
    report.ms.push_back(m);
    auto found = search_m(Field(m), allow_m9);
    bool all_five = true;
    for (auto name : kNamedFamilies) {
      all_five = all_five && std::find(found.begin(), found.end(), named_coeffs(name)) != found.end();
    }
    report.contains_five_families[m] = all_five;
    report.results[m] = std::move(found);
  }
  if (!report.ms.empty()) {
    report.intersection = report.results[report.ms.front()];
    for (unsigned m : report.ms) {
      const auto& r = report.results[m];
      std::erase_if(report.intersection,
                    [&](Coeffs c) { return std::find(r.begin(), r.end(), c) == r.end(); });
    }
  }
  return report;
}

std::vector<Coeffs> search_diff(const SearchReport& report) {
  if (report.ms.size() < 2) fail(ErrorCode::kInvalidArgument, "search_diff needs at least two values of m");
  std::vector<Coeffs> out;
  for (Coeffs c : report.intersection) {
    if (c.mask() == 0) continue;
    bool named = false;
    for (auto name : kNamedFamilies) named = named || named_coeffs(name) == c;
    if (!named) out.push_back(c);
  }
  return out;
}

}  // namespace rotaperm
