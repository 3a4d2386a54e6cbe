#include "rotaperm/certify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <utility>

#include "rotaperm/error.hpp"
#include "rotaperm/invert.hpp"
#include "rotaperm/parallel.hpp"
#include "rotaperm/proof_polys.hpp"

namespace rotaperm {

namespace {

constexpr unsigned kProbePoints = 100;

std::map<char, Elem> random_point(const Field& f, std::mt19937_64& rng) {
  std::map<char, Elem> at;
  for (char v : Vars::standard().names()) {
    at[v] = Elem{static_cast<std::uint32_t>(rng() % f.size())};
  }
  return at;
}

// Numeric resultant against the printed value at random GF(8) points.
std::string probe(const MPoly& p, const MPoly& q, char var, const MPoly& printed, bool& ok) {
  const Field f(3);
  std::mt19937_64 rng(0x5eed + static_cast<unsigned>(var));
  unsigned agree = 0;
  for (unsigned i = 0; i < kProbePoints; ++i) {
    const auto at = random_point(f, rng);
    if (numeric_resultant(f, p, q, var, at) == printed.evaluate(f, at)) ++agree;
  }
  ok = agree == kProbePoints;
  return "probe " + std::to_string(agree) + "/" + std::to_string(kProbePoints) + " over GF(8)";
}

CertReport symbolic(std::string name, const MPoly& lhs, const MPoly& rhs, std::string notes = {}) {
  CertReport r;
  r.name = std::move(name);
  r.diff = lhs + rhs;
  r.pass = r.diff.is_zero();
  if (!r.pass) {
    notes += (notes.empty() ? "" : "; ") + std::to_string(r.diff.term_count()) + " differing terms";
  }
  r.notes = std::move(notes);
  return r;
}

MPoly K1_from(const MPoly& A, const MPoly& B, const MPoly& C) { return (A * C + B * B).pow(3); }
MPoly K2_from(const MPoly& A, const MPoly& B, const MPoly& C, const MPoly& D) {
  return A * (A * D + B * C);
}

void require_odd(const Field& f) {
  if (f.m() % 2 == 0) fail(ErrorCode::kOddDegreeRequired, "numeric certificates need odd m");
}

}  // namespace

Elem numeric_resultant(const Field& f, const MPoly& p, const MPoly& q, char var,
                       const std::map<char, Elem>& at) {
  const unsigned n = p.degree_in(var), k = q.degree_in(var);
  if (n == 0 && k == 0) fail(ErrorCode::kDegenerateInput, "both polynomials are constant in the variable");
  auto coeffs = [&](const MPoly& poly, unsigned deg) {
    std::vector<Elem> c(deg + 1);
    for (unsigned i = 0; i <= deg; ++i) c[deg - i] = poly.coefficient_in(var, i).evaluate(f, at);
    return c;  // leading coefficient first
  };
  const auto pc = coeffs(p, n), qc = coeffs(q, k);
  const unsigned order = n + k;
  std::vector<std::vector<Elem>> mtx(order, std::vector<Elem>(order));
  for (unsigned r = 0; r < k; ++r) {
    for (unsigned i = 0; i <= n; ++i) mtx[r][r + i] = pc[i];
  }
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned i = 0; i <= k; ++i) mtx[k + r][r + i] = qc[i];
  }
  Elem det{1};
  for (unsigned col = 0; col < order; ++col) {
    unsigned piv = col;
    while (piv < order && mtx[piv][col].is_zero()) ++piv;
    if (piv == order) return Elem{};
    std::swap(mtx[piv], mtx[col]);
    det = f.mul(det, mtx[col][col]);
    const Elem inv = f.inv(mtx[col][col]);
    for (unsigned r = col + 1; r < order; ++r) {
      if (mtx[r][col].is_zero()) continue;
      const Elem factor = f.mul(mtx[r][col], inv);
      for (unsigned c = col; c < order; ++c) mtx[r][c] += f.mul(factor, mtx[col][c]);
    }
  }
  return det;
}

CertReport cert_resultant_g() { return cert_resultant_g(proof::P1(), proof::P3()); }

CertReport cert_resultant_g(const MPoly& P1, const MPoly& P3) {
  bool ok = false;
  const std::string notes = probe(P1, P3, 'x', proof::printed_g(), ok);
  CertReport r = symbolic("resultant_g", resultant(P1, P3, 'x'), proof::printed_g(), notes);
  r.pass = r.pass && ok;
  return r;
}

CertReport cert_resultant_h() { return cert_resultant_h(proof::printed_g(), proof::P2()); }

CertReport cert_resultant_h(const MPoly& g, const MPoly& P2) {
  bool ok = false;
  std::string notes = probe(g, P2, 'z', proof::printed_h(), ok);
  const MPoly h = resultant(g, P2, 'z');
  CertReport r = symbolic("resultant_h", h, proof::printed_h(), notes);

  // The y^9, y^6, y^3, y^0 blocks are the printed A, B, C, D, and nothing else occurs.
  const std::pair<unsigned, const MPoly*> blocks[] = {
      {9, &proof::printed_A()}, {6, &proof::printed_B()}, {3, &proof::printed_C()}, {0, &proof::printed_D()}};
  MPoly rebuilt;
  bool blocks_ok = true;
  for (const auto& [k, printed] : blocks) {
    const MPoly coef = h.coefficient_in('y', k);
    if (!(coef == *printed)) {
      blocks_ok = false;
      r.notes += std::string("; y^") + std::to_string(k) + " block differs from the printed coefficient";
    }
    rebuilt += coef * MPoly::variable('y').pow(k);
  }
  if (!(rebuilt == h)) {
    blocks_ok = false;
    r.notes += "; h has y-powers outside {9,6,3,0}";
  }
  r.pass = r.pass && ok && blocks_ok;
  return r;
}

CertReport cert_factorizations() {
  return cert_factorizations(proof::A_factored(), proof::ADBC_factored(), proof::ACB2_factored());
}

CertReport cert_factorizations(const MPoly& A_fact, const MPoly& ADBC_fact, const MPoly& ACB2_fact) {
  const MPoly& A = proof::printed_A();
  const MPoly& B = proof::printed_B();
  const MPoly& C = proof::printed_C();
  const MPoly& D = proof::printed_D();
  const MPoly d1 = A + A_fact;
  const MPoly d2 = A * D + B * C + ADBC_fact;
  const MPoly d3 = A * C + B * B + ACB2_fact;

  CertReport r;
  r.name = "factorizations";
  r.diff = d1 + d2 + d3;
  r.pass = d1.is_zero() && d2.is_zero() && d3.is_zero();
  const char* labels[] = {"A", "AD+BC", "AC+B^2"};
  const MPoly* diffs[] = {&d1, &d2, &d3};
  for (int i = 0; i < 3; ++i) {
    if (!r.notes.empty()) r.notes += "; ";
    r.notes += std::string(labels[i]) + (diffs[i]->is_zero() ? " ok" : " differs");
  }
  return r;
}

CertReport cert_beta_identity() { return cert_beta_identity(proof::printed_beta()); }

CertReport cert_beta_identity(const MPoly& beta) {
  const MPoly& A = proof::printed_A();
  const MPoly& B = proof::printed_B();
  const MPoly& C = proof::printed_C();
  const MPoly& D = proof::printed_D();
  // beta^2 + K2 beta + K1 = 0 with K1, K2 from the defining A, B, C, D.
  const MPoly lhs = beta * beta + K2_from(A, B, C, D) * beta;
  return symbolic("beta_identity", lhs, K1_from(A, B, C), "K1, K2 built from the defining A, B, C, D");
}

CertReport cert_printed_K() {
  const MPoly& A = proof::printed_A();
  const MPoly& B = proof::printed_B();
  const MPoly& C = proof::printed_C();
  const MPoly& D = proof::printed_D();
  const MPoly d1 = K1_from(A, B, C) + proof::printed_K1();
  const MPoly d2 = K2_from(A, B, C, D) + proof::printed_K2();
  CertReport r;
  r.name = "printed_K1_K2";
  r.mandatory = false;
  r.diff = d1 + d2;
  r.pass = d1.is_zero() && d2.is_zero();
  r.notes = "K1 " + std::to_string(proof::printed_K1().term_count()) + " terms " +
            (d1.is_zero() ? "match" : "differ in " + d1.to_text()) + "; K2 " +
            std::to_string(proof::printed_K2().term_count()) + " terms " +
            (d2.is_zero() ? "match" : "differ in " + d2.to_text());
  return r;
}

CertReport cert_resultant_Q() { return cert_resultant_Q(proof::Q1(), proof::Q2()); }

CertReport cert_resultant_Q(const MPoly& Q1, const MPoly& Q2) {
  bool ok = false;
  const std::string notes = probe(Q1, Q2, 'x', proof::printed_RQ(), ok);
  CertReport r = symbolic("resultant_Q", resultant(Q1, Q2, 'x'), proof::printed_RQ(), notes);
  r.pass = r.pass && ok;
  return r;
}

CertReport cert_beta_numeric(const Field& f) {
  require_odd(f);
  const std::uint32_t q = f.size();
  std::vector<std::uint64_t> admissible(q, 0), bad(q, 0);
  parallel_for(q, [&](std::size_t ai) {
    const Elem a{static_cast<std::uint32_t>(ai)};
    for (std::uint32_t bi = 0; bi < q; ++bi) {
      for (std::uint32_t ci = 0; ci < q; ++ci) {
        const ResolventCoeffs k = resolvent_coeffs(f, a, Elem{bi}, Elem{ci});
        const Elem adbc = f.mul(k.A, k.D) + f.mul(k.B, k.C);
        if (k.A.is_zero() || adbc.is_zero()) continue;
        ++admissible[ai];
        const Elem k1 = f.cube(f.mul(k.A, k.C) + f.sqr(k.B));
        const Elem k2 = f.mul(k.A, adbc);
        if (!f.trace(f.div(k1, f.sqr(k2))).is_zero()) ++bad[ai];
      }
    }
  });
  std::uint64_t total = 0, failures = 0;
  for (std::uint32_t i = 0; i < q; ++i) {
    total += admissible[i];
    failures += bad[i];
  }
  CertReport r;
  r.name = "beta_numeric_m" + std::to_string(f.m());
  r.pass = failures == 0;
  r.notes = std::to_string(total) + " admissible (a,b,c), " + std::to_string(failures) +
            " with trace 1";
  return r;
}

CertReport cert_charsum_support(const Field& f) {
  require_odd(f);
  const Elem one{1};
  std::uint64_t checked = 0;
  std::string notes;
  for (std::uint32_t ti = 0; ti < f.size(); ++ti) {
    const Elem t{ti};
    if (t == one) continue;
    const Elem s = one + t + f.sqr(t);   // 1 + t + t^2
    const Elem u = one + t;              // 1 + t
    const Elem c4 = f.mul(f.pow(u, 4), f.pow(s, 8));
    const Elem m1_2 = f.mul(f.pow(t, 4), f.sqr(s));
    const Elem m2_1 = f.sqr(t);
    const Elem m2_2 = f.sqr(s);
    std::vector<Elem> common;
    for (std::uint32_t wi = 0; wi < f.size(); ++wi) {
      const Elem w{wi};
      const Elem w2 = f.sqr(w), w4 = f.sqr(w2);
      const Elem M1 = w + f.mul(w2, m1_2) + f.mul(w4, c4);
      const Elem M2 = f.mul(w, m2_1) + f.mul(w2, m2_2) + f.mul(w4, c4);
      if (M1.is_zero() && M2.is_zero()) common.push_back(w);
    }
    const Elem w1 = f.inv(f.sqr(f.mul(u, s)));
    std::vector<Elem> expected{Elem{}, w1};
    std::sort(expected.begin(), expected.end());
    const Elem v = f.inv(u);
    const bool trace_ok = f.trace(one + v + f.sqr(v)) == one && f.trace(f.mul(f.cube(s), w1)) == one;
    if (common != expected || !trace_ok) {
      notes += (notes.empty() ? "" : "; ") + std::string("t=") + to_hex(t) +
               (common != expected ? " zero set differs" : " trace is 0");
    }
    ++checked;
  }
  CertReport r;
  r.name = "charsum_support_m" + std::to_string(f.m());
  r.pass = notes.empty();
  r.notes = std::to_string(checked) + " values of t checked" + (notes.empty() ? "" : ": " + notes);
  return r;
}

CertReport cert_A_zero_classification(const Field& f) {
  require_odd(f);
  if (f.m() > 5) fail(ErrorCode::kDomainTooLarge, "A = 0 classification is exhaustive; m <= 5");
  const std::uint32_t q = f.size();
  std::vector<std::uint64_t> zeros(q, 0), mismatches(q, 0);
  parallel_for(q, [&](std::size_t ai) {
    const Elem a{static_cast<std::uint32_t>(ai)};
    for (std::uint32_t bi = 0; bi < q; ++bi) {
      for (std::uint32_t ci = 0; ci < q; ++ci) {
        const Elem b{bi}, c{ci};
        const bool is_zero = resolvent_coeffs(f, a, b, c).A.is_zero();
        const bool predicted = (b.is_zero() && a == c) || (a.is_zero() && b == c) || (a == b && b == c);
        if (is_zero) ++zeros[ai];
        if (is_zero != predicted) ++mismatches[ai];
      }
    }
  });
  std::uint64_t z = 0, bad = 0;
  for (std::uint32_t i = 0; i < q; ++i) {
    z += zeros[i];
    bad += mismatches[i];
  }
  CertReport r;
  r.name = "A_zero_classification_m" + std::to_string(f.m());
  r.pass = bad == 0;
  r.notes = std::to_string(z) + " zeros of A, " + std::to_string(bad) + " outside the three cases";
  return r;
}

namespace {

using Runner = std::function<CertReport()>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"resultant_g", [] { return cert_resultant_g(); }},
      {"resultant_h", [] { return cert_resultant_h(); }},
      {"factorizations", [] { return cert_factorizations(); }},
      {"beta_identity", [] { return cert_beta_identity(); }},
      {"printed_K1_K2", [] { return cert_printed_K(); }},
      {"beta_numeric_m3", [] { return cert_beta_numeric(Field(3)); }},
      {"beta_numeric_m5", [] { return cert_beta_numeric(Field(5)); }},
      {"resultant_Q", [] { return cert_resultant_Q(); }},
      {"charsum_support_m3", [] { return cert_charsum_support(Field(3)); }},
      {"charsum_support_m5", [] { return cert_charsum_support(Field(5)); }},
      {"A_zero_classification_m3", [] { return cert_A_zero_classification(Field(3)); }},
      {"A_zero_classification_m5", [] { return cert_A_zero_classification(Field(5)); }},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& cert_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, run] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<CertReport> certify_all(std::optional<std::string_view> only) {
  std::vector<CertReport> out;
  for (const auto& [name, run] : registry()) {
    if (only && *only != name) continue;
    out.push_back(run());
  }
  if (only && out.empty()) fail(ErrorCode::kUnknownName, "no certificate named '" + std::string(*only) + "'");
  return out;
}

}  // namespace rotaperm
