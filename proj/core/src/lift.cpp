#include "rotaperm/lift.hpp"

#include <algorithm>
#include <numeric>

#include "rotaperm/error.hpp"
#include "rotaperm/parallel.hpp"
#include "rotaperm/permcheck.hpp"

namespace rotaperm {

namespace {

struct Cubic {
  Elem alpha, beta, gamma;
};

bool has_root(const Field& f, const Cubic& k) {
  for (std::uint32_t v = 0; v < f.size(); ++v) {
    const Elem u{v};
    const Elem u2 = f.sqr(u);
    if (f.mul(u2, u) + f.mul(k.alpha, u2) + f.mul(k.beta, u) + k.gamma == Elem{}) return true;
  }
  return false;
}

Triple split(const Field& f, std::uint32_t bits) {
  return point_at(f, bits);
}

ExtElem schoolbook(const Field& f, const Cubic& k, ExtElem a, ExtElem b) {
  const Triple x = split(f, a.bits), y = split(f, b.bits);
  Elem r0 = f.mul(x.x, y.x);
  Elem r1 = f.mul(x.x, y.y) + f.mul(x.y, y.x);
  Elem r2 = f.mul(x.x, y.z) + f.mul(x.y, y.y) + f.mul(x.z, y.x);
  Elem r3 = f.mul(x.y, y.z) + f.mul(x.z, y.y);
  const Elem r4 = f.mul(x.z, y.z);
  // w^3 = alpha w^2 + beta w + gamma
  r3 += f.mul(k.alpha, r4);
  r2 += f.mul(k.beta, r4);
  r1 += f.mul(k.gamma, r4);
  r2 += f.mul(k.alpha, r3);
  r1 += f.mul(k.beta, r3);
  r0 += f.mul(k.gamma, r3);
  return ExtElem{static_cast<std::uint32_t>(point_index(f, {r0, r1, r2}))};
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n) {
  // Extended Euclid; a and n coprime.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

ExtField::ExtField(const Field& base) {
  if (base.m() > kMaxBaseDegree) {
    fail(ErrorCode::kDomainTooLarge, "extension fields need m <= 10");
  }
  auto impl = std::make_shared<Impl>(Impl{base, {}, {}, {}, 0, {}, 0, {}, {}});
  const std::uint32_t q = base.size();
  bool found = false;
  for (std::uint32_t al = 0; al < q && !found; ++al) {
    for (std::uint32_t be = 0; be < q && !found; ++be) {
      for (std::uint32_t ga = 1; ga < q && !found; ++ga) {
        const Cubic k{Elem{al}, Elem{be}, Elem{ga}};
        if (!has_root(base, k)) {
          impl->alpha = k.alpha;
          impl->beta = k.beta;
          impl->gamma = k.gamma;
          found = true;
        }
      }
    }
  }
  impl->size = std::uint64_t{q} * q * q;
  impl->order_primes = prime_factors(impl->size - 1);
  impl_ = impl;

  if (base.m() <= kMaxTableDegree) {
    const std::uint64_t n = impl->size - 1;
    std::uint32_t g = 2;
    if (n > 1) {
      while (!is_primitive(ExtElem{g})) ++g;
    } else {
      g = static_cast<std::uint32_t>(point_index(base, {Elem{1}, Elem{}, Elem{}}));
    }
    impl->generator = g;
    impl->log.assign(impl->size, 0);
    impl->exp.assign(2 * n, 0);
    ExtElem acc = one();
    for (std::uint64_t k = 0; k < n; ++k) {
      impl->exp[k] = impl->exp[k + n] = acc.bits;
      impl->log[acc.bits] = static_cast<std::uint32_t>(k);
      acc = mul_reference(acc, ExtElem{g});
    }
  }
}

std::array<Elem, 4> ExtField::cubic() const {
  return {impl_->gamma, impl_->beta, impl_->alpha, Elem{1}};
}

ExtElem ExtField::from_coords(const Triple& t) const {
  return ExtElem{static_cast<std::uint32_t>(point_index(base(), t))};
}

Triple ExtField::coords(ExtElem e) const { return split(base(), e.bits); }

ExtElem ExtField::mul_reference(ExtElem a, ExtElem b) const {
  return schoolbook(base(), {impl_->alpha, impl_->beta, impl_->gamma}, a, b);
}

ExtElem ExtField::mul(ExtElem a, ExtElem b) const {
  if (!has_tables()) return mul_reference(a, b);
  if (a.is_zero() || b.is_zero()) return ExtElem{};
  return ExtElem{impl_->exp[impl_->log[a.bits] + impl_->log[b.bits]]};
}

ExtElem ExtField::pow(ExtElem a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.is_zero()) return ExtElem{};
  if (has_tables()) return exp((log(a) * (e % group_order())) % group_order());
  ExtElem r = one();
  for (; e != 0; e >>= 1) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
  }
  return r;
}

ExtElem ExtField::inv(ExtElem a) const {
  if (a.is_zero()) return ExtElem{};
  return pow(a, group_order() - 1);
}

std::uint64_t ExtField::order(ExtElem a) const {
  if (a.is_zero()) fail(ErrorCode::kInvalidArgument, "order of zero");
  std::uint64_t ord = group_order();
  for (std::uint64_t p : impl_->order_primes) {
    while (ord % p == 0 && pow(a, ord / p) == one()) ord /= p;
  }
  return ord;
}

ExtElem ExtField::generator() const {
  if (!has_tables()) fail(ErrorCode::kDomainTooLarge, "no log tables for m > 5");
  return ExtElem{impl_->generator};
}

std::uint64_t ExtField::log(ExtElem a) const {
  if (!has_tables()) fail(ErrorCode::kDomainTooLarge, "no log tables for m > 5");
  if (a.is_zero()) fail(ErrorCode::kInvalidArgument, "log of zero");
  return impl_->log[a.bits];
}

ExtElem ExtField::exp(std::uint64_t k) const {
  if (!has_tables()) fail(ErrorCode::kDomainTooLarge, "no log tables for m > 5");
  return ExtElem{impl_->exp[k % group_order()]};
}

std::uint64_t reduce_exponent(const ExtField& ext, std::uint64_t e) {
  return e == 0 ? 0 : ((e - 1) % ext.group_order()) + 1;
}

LiftedPoly LiftedPoly::from_terms(const ExtField& ext, std::vector<Term> terms) {
  for (Term& t : terms) t.e = reduce_exponent(ext, t.e);
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.e < y.e; });
  LiftedPoly p;
  for (const Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().e == t.e) {
      p.terms_.back().c += t.c;
      if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
    } else if (!t.c.is_zero()) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

std::optional<ExtElem> LiftedPoly::coefficient(std::uint64_t e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, std::uint64_t v) { return t.e < v; });
  if (it == terms_.end() || it->e != e) return std::nullopt;
  return it->c;
}

LiftedPoly interpolate(const ExtField& ext, const std::vector<ExtElem>& values) {
  const std::uint64_t N = ext.size();
  if (values.size() != N) fail(ErrorCode::kInvalidArgument, "need one value per field element");
  if (!ext.has_tables()) fail(ErrorCode::kDomainTooLarge, "interpolation needs log tables (m <= 5)");
  const std::uint64_t n = N - 1;

  // Nonzero samples at nonzero points as (log t, log F(t)).
  std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;
  ExtElem total;
  for (std::uint64_t t = 0; t < N; ++t) {
    total += values[t];
    if (t != 0 && !values[t].is_zero()) {
      samples.emplace_back(ext.log(ExtElem{static_cast<std::uint32_t>(t)}), ext.log(values[t]));
    }
  }

  // c_k = sum over t != 0 of F(t) t^(N-1-k) for 1 <= k <= N-2.
  std::vector<ExtElem> coeff(N);
  coeff[0] = values[0];
  coeff[n] = total;
  parallel_for(n > 1 ? n - 1 : 0, [&](std::size_t i) {
    const std::uint64_t k = i + 1;
    const std::uint64_t shift = n - k;
    ExtElem acc;
    for (const auto& [lt, lf] : samples) acc += ext.exp(lf + (lt * shift) % n);
    coeff[k] = acc;
  });

  std::vector<LiftedPoly::Term> terms;
  for (std::uint64_t k = 0; k < N; ++k) {
    if (!coeff[k].is_zero()) terms.push_back({k, coeff[k]});
  }
  return LiftedPoly::from_terms(ext, std::move(terms));
}

LiftedPoly lift_permutation(const ExtField& ext, Coeffs coeffs) {
  const Field& f = ext.base();
  if (f.m() > kMaxLiftDegree) fail(ErrorCode::kDomainTooLarge, "lifting is limited to m <= 5");
  std::vector<ExtElem> values(ext.size());
  for (std::uint64_t t = 0; t < ext.size(); ++t) {
    values[t] = ext.from_coords(eval_F(f, coeffs, point_at(f, t)));
  }
  return interpolate(ext, values);
}

ExtElem evaluate(const ExtField& ext, const LiftedPoly& p, ExtElem t) {
  ExtElem acc;
  for (const auto& term : p.terms()) acc += ext.mul(term.c, ext.pow(t, term.e));
  return acc;
}

std::vector<std::uint64_t> support(const LiftedPoly& p) {
  std::vector<std::uint64_t> out;
  out.reserve(p.term_count());
  for (const auto& t : p.terms()) out.push_back(t.e);
  return out;
}

bool is_pp(const ExtField& ext, const LiftedPoly& p) {
  if (ext.base().m() > kMaxLiftDegree) fail(ErrorCode::kDomainTooLarge, "is_pp is limited to m <= 5");
  std::vector<bool> seen(ext.size(), false);
  for (std::uint64_t t = 0; t < ext.size(); ++t) {
    const ExtElem v = evaluate(ext, p, ExtElem{static_cast<std::uint32_t>(t)});
    if (seen[v.bits]) return false;
    seen[v.bits] = true;
  }
  return true;
}

LiftedPoly qm_transform(const ExtField& ext, const LiftedPoly& q, const QmWitness& w) {
  std::vector<LiftedPoly::Term> terms;
  for (const auto& t : q.terms()) {
    const ExtElem c = ext.mul(w.a, ext.mul(t.c, ext.pow(w.c, t.e)));
    std::uint64_t e = 0;
    if (t.e != 0) {
      const std::uint64_t n = ext.group_order();
      e = ((t.e % n) * (w.d % n)) % n;
      if (e == 0) e = n;
    }
    terms.push_back({e, c});
  }
  return LiftedPoly::from_terms(ext, std::move(terms));
}

std::optional<QmWitness> qm_equivalent(const ExtField& ext, const LiftedPoly& p, const LiftedPoly& q) {
  if (!ext.has_tables()) fail(ErrorCode::kDomainTooLarge, "QM-equivalence needs log tables (m <= 5)");
  if (p.term_count() != q.term_count()) return std::nullopt;
  if (p.is_zero()) return QmWitness{ext.one(), ext.one(), 1};
  const std::uint64_t n = ext.group_order();

  for (std::uint64_t d = 1; d < n; ++d) {
    if (std::gcd(d, n) != 1) continue;
    // Exponent e of Q lands on e*d (reduced); the map is injective for unit d.
    std::vector<LiftedPoly::Term> mapped;  // (exponent in P, coefficient of Q)
    bool ok = true;
    for (const auto& t : q.terms()) {
      std::uint64_t e = 0;
      if (t.e != 0) {
        e = ((t.e % n) * d) % n;
        if (e == 0) e = n;
      }
      const auto pc = p.coefficient(e);
      if (!pc) {
        ok = false;
        break;
      }
      mapped.push_back({t.e, ext.mul(*pc, ext.inv(t.c))});  // r_e = a c^e
    }
    if (!ok) continue;

    // c^(e_j - e_i) = r_j / r_i for the first pair with distinct exponents mod n.
    std::vector<std::uint64_t> log_c{0};
    for (std::size_t j = 1; j < mapped.size(); ++j) {
      const std::uint64_t delta = (mapped[j].e % n + n - mapped[0].e % n) % n;
      if (delta == 0) continue;
      const std::uint64_t rho = (ext.log(mapped[j].c) + n - ext.log(mapped[0].c)) % n;
      const std::uint64_t g = std::gcd(delta, n);
      if (rho % g != 0) {
        log_c.clear();
        break;
      }
      const std::uint64_t nn = n / g;
      const std::uint64_t base = nn == 1 ? 0 : ((rho / g) % nn) * mod_inverse((delta / g) % nn, nn) % nn;
      log_c.clear();
      for (std::uint64_t k = 0; k < g; ++k) log_c.push_back(base + k * nn);
      break;
    }

    for (std::uint64_t lc : log_c) {
      const ExtElem c = ext.exp(lc);
      const ExtElem a = ext.mul(mapped[0].c, ext.inv(ext.pow(c, mapped[0].e)));
      const QmWitness w{a, c, d};
      if (qm_transform(ext, q, w) == p) return w;
    }
  }
  return std::nullopt;
}

QmWitness invert_witness(const ExtField& ext, const QmWitness& w) {
  const std::uint64_t n = ext.group_order();
  const std::uint64_t d_inv = n == 1 ? 1 : mod_inverse(w.d % n, n);
  return {ext.inv(w.a), ext.inv(ext.pow(w.c, d_inv)), d_inv};
}

}  // namespace rotaperm
