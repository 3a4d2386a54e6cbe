#include "rotaperm/permcheck.hpp"

#include <atomic>
#include <map>
#include <vector>

#include "rotaperm/error.hpp"
#include "rotaperm/parallel.hpp"
#include "rotaperm/proof_polys.hpp"

namespace rotaperm {

std::uint64_t point_index(const Field& field, const Triple& p) {
  const unsigned m = field.m();
  return (std::uint64_t{p.x.bits} << (2 * m)) | (std::uint64_t{p.y.bits} << m) | p.z.bits;
}

Triple point_at(const Field& field, std::uint64_t index) {
  const unsigned m = field.m();
  const std::uint64_t mask = field.size() - 1;
  return {Elem{static_cast<std::uint32_t>((index >> (2 * m)) & mask)},
          Elem{static_cast<std::uint32_t>((index >> m) & mask)},
          Elem{static_cast<std::uint32_t>(index & mask)}};
}

PermReport is_permutation(const Field& field, Coeffs coeffs) {
  const unsigned m = field.m();
  if (m > kMaxPermcheckDegree) {
    fail(ErrorCode::kDomainTooLarge, "is_permutation supports m <= 9 (2^27-point bit-table)");
  }
  const std::uint64_t q = field.size();
  const std::uint64_t points = q * q * q;
  std::vector<std::atomic<std::uint64_t>> seen((points + 63) / 64);
  std::atomic<bool> collided{false};

  // One task per leading coordinate x.
  parallel_for(q, [&](std::size_t x) {
    if (collided.load(std::memory_order_relaxed)) return;
    for (std::uint64_t yz = 0; yz < q * q; ++yz) {
      const std::uint64_t idx = (std::uint64_t{x} << (2 * m)) | yz;
      const std::uint64_t img = point_index(field, eval_F(field, coeffs, point_at(field, idx)));
      const std::uint64_t bit = std::uint64_t{1} << (img % 64);
      if (seen[img / 64].fetch_or(bit, std::memory_order_relaxed) & bit) {
        collided.store(true, std::memory_order_relaxed);
        return;
      }
    }
  });

  PermReport report{coeffs, m, !collided.load(), std::nullopt, points};
  if (report.is_permutation) return report;

  // Deterministic witness: rescan in order; the first repeated image gives the later point.
  std::vector<std::uint64_t> mark((points + 63) / 64, 0);
  for (std::uint64_t idx = 0; idx < points; ++idx) {
    const std::uint64_t img = point_index(field, eval_F(field, coeffs, point_at(field, idx)));
    const std::uint64_t bit = std::uint64_t{1} << (img % 64);
    if (mark[img / 64] & bit) {
      std::uint64_t earlier = 0;
      for (; earlier < idx; ++earlier) {
        if (point_index(field, eval_F(field, coeffs, point_at(field, earlier))) == img) break;
      }
      report.witness = std::make_pair(point_at(field, earlier), point_at(field, idx));
      break;
    }
    mark[img / 64] |= bit;
  }
  return report;
}

bool difference_check(const Field& field, Coeffs coeffs) {
  if (field.m() != 3) fail(ErrorCode::kDomainTooLarge, "difference_check is limited to m = 3");
  const std::uint64_t points = std::uint64_t{field.size()} * field.size() * field.size();
  std::vector<std::uint64_t> image(points);
  for (std::uint64_t v = 0; v < points; ++v) {
    image[v] = point_index(field, eval_F(field, coeffs, point_at(field, v)));
  }
  // Index XOR is coordinatewise field addition.
  for (std::uint64_t s = 1; s < points; ++s) {
    for (std::uint64_t v = 0; v < points; ++v) {
      if (image[v ^ s] == image[v]) return false;
    }
  }
  return true;
}

std::uint64_t count_zeros_D(const Field& field, Elem t) {
  if (!field.contains(t)) fail(ErrorCode::kInvalidArgument, "t outside the field");
  const MPoly& d = proof::D_poly();
  const Vars& vars = d.vars();
  const std::size_t ti = *vars.index_of('t');
  const std::size_t yi = *vars.index_of('Y');
  const std::size_t zi = *vars.index_of('Z');

  // Specialize t, leaving sum over (i, j) of coef * Y^i Z^j.
  std::map<std::pair<unsigned, unsigned>, Elem> coef;
  for (auto term : d.terms()) {
    coef[{d.exponent(term, yi), d.exponent(term, zi)}] += field.pow(t, d.exponent(term, ti));
  }
  std::uint64_t zeros = 0;
  for (std::uint32_t y = 0; y < field.size(); ++y) {
    for (std::uint32_t z = 0; z < field.size(); ++z) {
      Elem v;
      for (const auto& [e, c] : coef) {
        if (c.is_zero()) continue;
        v += field.mul(c, field.mul(field.pow(Elem{y}, e.first), field.pow(Elem{z}, e.second)));
      }
      if (v.is_zero()) ++zeros;
    }
  }
  return zeros;
}

}  // namespace rotaperm
