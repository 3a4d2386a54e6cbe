// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rotaperm/certify.hpp"
#include "rotaperm/error.hpp"
#include "rotaperm/family.hpp"
#include "rotaperm/invert.hpp"
#include "rotaperm/lift.hpp"
#include "rotaperm/permcheck.hpp"
#include "rotaperm/search.hpp"

using namespace rotaperm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

Elem rand_elem(const Field& f, std::mt19937_64& rng) { return Elem{static_cast<std::uint32_t>(rng() % f.size())}; }

// 1. Symbolic certificates.
Outcome ac1() {
  Outcome o;
  std::ostringstream note;
  for (const char* name : {"resultant_g", "resultant_h", "resultant_Q", "factorizations", "beta_identity"}) {
    const CertReport r = certify_all(name).front();
    o.require(r.pass, std::string(name) + " failed: " + r.notes);
    note << name << (r.pass ? " ok " : " FAIL ");
  }
  // The stated leading terms of g.
  const MPoly g = resultant(MPoly::parse("x^3+y^3+a"), MPoly::parse("xy^2+yz^2+x^2z+c"), 'x');
  const auto terms = g.to_text();
  o.require(terms.rfind("y^9+y^6*a+y^5*z*c", 0) == 0, "g starts " + terms.substr(0, 24));
  if (o.pass) o.detail = note.str();
  return o;
}

// 2. Named families are permutations at m = 3, 5, 7; x^3 is not at m = 2.
Outcome ac2() {
  Outcome o;
  for (unsigned m : {3u, 5u, 7u}) {
    const Field f(m);
    for (auto name : kNamedFamilies) {
      const PermReport r = is_permutation(f, named_coeffs(name));
      o.require(r.is_permutation && r.points_checked == (1ull << (3 * m)),
                std::string(name) + " at m=" + std::to_string(m));
    }
  }
  const Field f2(2);
  o.require(!is_permutation(f2, Coeffs{}).is_permutation, "x^3 permutes GF(4)^3");
  // Independent oracle: at m = 3 re-check bijectivity with the schoolbook field.
  const auto g = oracle::gf3();
  for (auto name : kNamedFamilies) {
    std::vector<bool> seen(512);
    const std::uint8_t c = named_coeffs(name).mask();
    for (std::uint32_t i = 0; i < 512; ++i) {
      const std::uint32_t x = i >> 6, y = (i >> 3) & 7, z = i & 7;
      seen[g.f(c, x, y, z) << 6 | g.f(c, y, z, x) << 3 | g.f(c, z, x, y)] = true;
    }
    o.require(std::find(seen.begin(), seen.end(), false) == seen.end(), std::string(name) + " oracle");
  }
  if (o.pass) o.detail = "15 exhaustive checks, x^3 at m=2 rejected";
  return o;
}

// 3. Inversion round-trips.
Outcome ac3() {
  Outcome o;
  std::uint64_t checked = 0;
  for (unsigned m : {3u, 5u, 7u}) {
    const Field f(m);
    const InverseTable t2(f, named_coeffs("T2"));
    const std::vector<std::pair<std::string, std::function<Triple(const Triple&)>>> inverters{
        {"T1", [&](const Triple& t) { return invert_T1_resolvent(f, t); }},
        {"T2", [&](const Triple& t) { return t2(t); }},
        {"T3", [&](const Triple& t) { return invert_T3(f, t); }},
        {"T4", [&](const Triple& t) { return invert_T4(f, t); }},
        {"T5", [&](const Triple& t) { return invert_T5(f, t); }},
    };
    std::mt19937_64 rng(7000 + m);
    const std::uint64_t n = m == 7 ? 10000 : (1ull << (3 * m));
    for (const auto& [name, inv] : inverters) {
      const Coeffs c = named_coeffs(name);
      std::uint64_t bad = 0;
      for (std::uint64_t i = 0; i < n; ++i) {
        const Triple p = m == 7 ? Triple{rand_elem(f, rng), rand_elem(f, rng), rand_elem(f, rng)} : point_at(f, i);
        try {
          if (inv(eval_F(f, c, p)) != p) ++bad;
        } catch (const Error& e) {
          ++bad;
          o.require(e.code() != ErrorCode::kFormulaInconsistent, name + " raised FormulaInconsistent");
        }
      }
      checked += n;
      o.require(bad == 0, name + " m=" + std::to_string(m) + ": " + std::to_string(bad) + " mismatches");
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " round-trips";
  return o;
}

// 4. Character-sum core.
Outcome ac4() {
  Outcome o;
  for (unsigned m : {3u, 5u, 7u}) {
    const Field f(m);
    for (std::uint32_t t = 0; t < f.size(); ++t) {
      const std::uint64_t n = count_zeros_D(f, Elem{t});
      o.require(n == 0, "m=" + std::to_string(m) + " t=" + to_hex(Elem{t}) + ": " + std::to_string(n) + " zeros");
    }
  }
  for (unsigned m : {3u, 5u}) {
    const CertReport r = cert_charsum_support(Field(m));
    o.require(r.pass, r.name + ": " + r.notes);
  }
  if (o.pass) o.detail = "D has no zeros for any t at m=3,5,7";
  return o;
}

// 5. Lift of T3 at m = 3.
Outcome ac5() {
  Outcome o;
  const ExtField ext{Field(3)};
  const LiftedPoly p = lift_permutation(ext, named_coeffs("T3"));
  o.require(is_pp(ext, p), "lift is not a PP of GF(2^9)");
  // Agreement with the coordinate map at every point.
  const Field& f = ext.base();
  for (std::uint64_t i = 0; i < ext.size(); ++i) {
    const Triple v = point_at(f, i);
    if (evaluate(ext, p, ext.from_coords(v)) != ext.from_coords(eval_F(f, named_coeffs("T3"), v))) {
      o.require(false, "lift disagrees with F at " + std::to_string(i));
      break;
    }
  }
  const auto exps = support(p);
  o.require(exps.size() > 3, "only " + std::to_string(exps.size()) + " terms");
  for (auto e : exps) o.require(e % 7 == 3, "exponent " + std::to_string(e) + " not 3 mod 7");
  auto tri = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return LiftedPoly::from_terms(ext, {{a, ext.one()}, {b, ext.one()}, {c, ext.one()}});
  };
  // q = 8: x + x^(q^2-q+1) + x^(q^2+q-1), and two more three-term shapes.
  for (const auto& t : {tri(1, 57, 71), tri(1, 64, 71), tri(1, 64, 449)}) {
    o.require(!qm_equivalent(ext, p, t).has_value(), "equivalent to a trinomial");
  }
  if (o.pass) o.detail = std::to_string(exps.size()) + " terms, inequivalent to 3 trinomials";
  return o;
}

// 6. Search.
Outcome ac6() {
  Outcome o;
  const std::vector<unsigned> ms{3, 5, 7};
  const SearchReport a = search_all(ms);
  const SearchReport b = search_all(ms);
  std::ostringstream counts;
  for (unsigned m : ms) {
    o.require(a.contains_five_families.at(m), "named family missing at m=" + std::to_string(m));
    o.require(a.results.at(m) == b.results.at(m), "nondeterministic at m=" + std::to_string(m));
    counts << "m=" << m << ":" << a.results.at(m).size() << " ";
  }
  const Field f3(3);
  std::vector<Coeffs> diff_set;
  for (unsigned i = 0; i < 256; ++i) {
    if (difference_check(f3, Coeffs(static_cast<std::uint8_t>(i)))) diff_set.push_back(Coeffs(static_cast<std::uint8_t>(i)));
  }
  sort_by_bitstring(diff_set);
  o.require(diff_set == a.results.at(3), "m=3 set differs from difference_check");
  counts << "intersection:" << a.intersection.size();
  if (o.pass) o.detail = counts.str();
  return o;
}

// 7. Property suites.
Outcome ac7() {
  Outcome o;
  const std::vector<oracle::GF> oracles{oracle::gf3(), oracle::gf5(), oracle::gf7()};
  for (const auto& g : oracles) {
    const Field f(g.m);
    const bool exhaustive = g.m == 3;
    const std::uint32_t q = f.size();
    std::mt19937_64 rng(9000 + g.m);
    const std::uint64_t trials = exhaustive ? std::uint64_t{q} * q * q : 2000;
    const std::string tag = " m=" + std::to_string(g.m);
    std::uint64_t bad_field = 0, bad_trace = 0, bad_solver = 0, bad_family = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
      const Elem a = exhaustive ? Elem{static_cast<std::uint32_t>(i >> 6)} : rand_elem(f, rng);
      const Elem b = exhaustive ? Elem{static_cast<std::uint32_t>((i >> 3) & 7)} : rand_elem(f, rng);
      const Elem c = exhaustive ? Elem{static_cast<std::uint32_t>(i & 7)} : rand_elem(f, rng);
      // Field laws against the oracle.
      if (f.mul(a, b).bits != g.mul(a.bits, b.bits) || f.mul(a, b) != f.mul(b, a) ||
          f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)) ||
          f.mul(a, b + c) != f.mul(a, b) + f.mul(a, c) || f.mul(a, Elem{1}) != a ||
          (!a.is_zero() && f.mul(a, f.inv(a)) != Elem{1})) {
        ++bad_field;
      }
      // Trace: additive, GF(2)-linear, Frobenius invariant.
      if (f.trace(a + b) != f.trace(a) + f.trace(b) || f.trace(f.mul(Elem{0}, a)) != Elem{0} ||
          f.trace(f.sqr(a)) != f.trace(a) || f.trace(a).bits != g.trace(a.bits)) {
        ++bad_trace;
      }
      // Solvers against exhaustive scan.
      std::vector<Elem> qr;
      for (auto r : g.quadratic_roots(a.bits, b.bits)) qr.push_back(Elem{r});
      std::vector<Elem> cr;
      for (auto r : g.cubic_roots(a.bits, b.bits, c.bits)) cr.push_back(Elem{r});
      if (f.solve_quadratic(a, b) != qr || f.cubic_roots(a, b, c) != cr) ++bad_solver;
      if (!a.is_zero()) {
        const Elem arg = f.div(b, f.sqr(a));
        if (qr.empty() != !f.trace(arg).is_zero()) ++bad_solver;
      }
      if (!c.is_zero()) {
        const bool unique = g.trace(g.mul(g.pow(b.bits, 3), g.inv(g.pow(c.bits, 2))) ^ 1u) != 0;
        if (unique != (g.cubic_roots(0, b.bits, c.bits).size() == 1)) ++bad_solver;
      }
      // Equivariance and homogeneity for every named family.
      const Triple v{a, b, c};
      const Elem lambda = exhaustive ? Elem{static_cast<std::uint32_t>(1 + i % (q - 1))} : Elem{static_cast<std::uint32_t>(1 + rng() % (q - 1))};
      for (auto name : kNamedFamilies) {
        const Coeffs co = named_coeffs(name);
        const Triple fv = eval_F(f, co, v);
        const Triple scaled = eval_F(f, co, {f.mul(lambda, a), f.mul(lambda, b), f.mul(lambda, c)});
        const Elem l3 = f.cube(lambda);
        if (eval_F(f, co, rotate(v)) != rotate(fv) ||
            scaled != Triple{f.mul(l3, fv.x), f.mul(l3, fv.y), f.mul(l3, fv.z)} ||
            fv.x.bits != g.f(co.mask(), a.bits, b.bits, c.bits)) {
          ++bad_family;
        }
      }
    }
    // Trace character sum, and cube-root bijectivity (exhaustive at every m).
    std::uint64_t bad_sum = 0;
    const std::uint32_t alphas = exhaustive ? q : 64;
    for (std::uint32_t k = 0; k < alphas; ++k) {
      const Elem alpha = exhaustive ? Elem{k} : rand_elem(f, rng);
      long sum = 0;
      for (std::uint32_t w = 0; w < q; ++w) sum += f.trace(f.mul(alpha, Elem{w})).is_zero() ? 1 : -1;
      if (sum != (alpha.is_zero() ? static_cast<long>(q) : 0)) ++bad_sum;
    }
    std::vector<bool> hit(q);
    std::uint64_t bad_cbrt = 0;
    for (std::uint32_t x = 0; x < q; ++x) {
      const Elem r = f.cube_root(Elem{x});
      if (f.cube(r) != Elem{x}) ++bad_cbrt;
      hit[r.bits] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) ++bad_cbrt;
    o.require(bad_field == 0, "field laws" + tag);
    o.require(bad_trace == 0 && bad_sum == 0, "trace properties" + tag);
    o.require(bad_solver == 0, "solvers" + tag);
    o.require(bad_family == 0, "equivariance/homogeneity" + tag);
    o.require(bad_cbrt == 0, "cube roots" + tag);
  }
  if (o.pass) o.detail = "exhaustive at m=3, 2000 samples at m=5,7";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 symbolic certificates", ac1}, {"AC2 named permutations", ac2}, {"AC3 inversion round-trip", ac3},
      {"AC4 character-sum core", ac4},    {"AC5 lift at m=3", ac5},        {"AC6 search", ac6},
      {"AC7 property suites", ac7},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto started = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::printf("%s %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
