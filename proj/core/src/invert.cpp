#include "rotaperm/invert.hpp"

#include <limits>

#include "rotaperm/error.hpp"
#include "rotaperm/parallel.hpp"
#include "rotaperm/permcheck.hpp"

namespace rotaperm {

namespace {

void require_odd(const Field& field) {
  if (field.m() % 2 == 0) fail(ErrorCode::kOddDegreeRequired, "inversion needs odd m");
}

Triple checked(const Field& field, std::string_view family, const Triple& target, const Triple& p) {
  if (eval_F(field, named_coeffs(family), p) != target) {
    fail(ErrorCode::kFormulaInconsistent,
         std::string(family) + " closed form gives a point that does not map back to (" +
             to_hex(target.x) + "," + to_hex(target.y) + "," + to_hex(target.z) + ")");
  }
  return p;
}

}  // namespace

ResolventCoeffs resolvent_coeffs(const Field& f, Elem a, Elem b, Elem c) {
  // Powers a^0..a^6 etc.; c only appears as c^3, c^6, c^9.
  auto powers = [&](Elem v, unsigned n) {
    std::vector<Elem> p(n + 1);
    p[0] = Elem{1};
    for (unsigned i = 1; i <= n; ++i) p[i] = f.mul(p[i - 1], v);
    return p;
  };
  const auto A_ = powers(a, 6);
  const auto B_ = powers(b, 6);
  const Elem c3 = f.cube(c), c6 = f.sqr(c3), c9 = f.mul(c6, c3);
  auto t = [&](unsigned i, unsigned j, Elem cc) { return f.mul(f.mul(A_[i], B_[j]), cc); };
  const Elem one{1};

  ResolventCoeffs r;
  r.A = t(6, 0, one) + t(5, 1, one) + t(3, 3, one) + t(2, 1, c3) + t(1, 5, one) + t(1, 2, c3) +
        t(0, 6, one) + c6;
  r.B = t(6, 1, one) + t(4, 3, one) + t(4, 0, c3) + t(3, 1, c3) + t(2, 5, one) + t(2, 2, c3) +
        t(1, 3, c3) + t(1, 0, c6) + t(0, 4, c3) + t(0, 1, c6);
  r.C = t(6, 2, one) + t(5, 3, one) + t(4, 4, one) + t(3, 2, c3) + t(2, 3, c3) + t(2, 0, c6) +
        t(0, 2, c6);
  r.D = t(6, 3, one) + t(4, 2, c3) + t(2, 1, c6) + c9;
  return r;
}

Triple invert_T3(const Field& f, const Triple& target) {
  require_odd(f);
  const Elem a = target.x, b = target.y, c = target.z;
  const Elem d = f.cube_root(a + b + c);
  if (b == c) {
    const Elem e = d + f.cube_root(a + b);
    return checked(f, "T3", target, {d, e, e});
  }
  // W^3 = (a+b)(b+c)^3 / ((a+c)^3 + (b+c)^3) with the common factor a+b
  // cancelled, so the a = b case needs no special branch.
  const Elem u = a + c, v = b + c;
  const Elem w = f.cube_root(f.div(f.cube(v), f.sqr(u) + f.mul(u, v) + f.sqr(v)));
  return checked(f, "T3", target,
                 {d + w, d + f.mul(f.div(u, v), w), d + f.mul(f.div(a + b, v), w)});
}

Triple invert_T4(const Field& f, const Triple& target) {
  require_odd(f);
  const Elem a = target.x, b = target.y, c = target.z;
  if (a == b) {
    const Elem s = f.cube_root(b);
    const Elem e = s + f.cube_root(b + c);
    return checked(f, "T4", target, {e, s, e});
  }
  if (b == c) {
    const Elem s = f.cube_root(c);
    const Elem e = f.cube_root(a + b) + s;
    return checked(f, "T4", target, {e, e, s});
  }
  const Elem den = f.cube(a + b) + f.cube(a + c);
  const Elem X = f.div(f.mul(a + b, f.cube_root(b + c)), f.cube_root(den));
  const Elem Y = f.mul(f.div(a + c, a + b), X);
  const Elem num = f.mul(b, f.cube(a + c)) + f.mul(f.sqr(a + b), f.sqr(c) + f.mul(a, b));
  const Elem w = f.cube_root(f.div(num, den));
  return checked(f, "T4", target, {w + Y, w + X, w + X + Y});
}

Triple invert_T5(const Field& f, const Triple& target) {
  require_odd(f);
  const Elem a = target.x, b = target.y, c = target.z;
  if (a == c) {
    const Elem s = f.cube_root(b);
    const Elem e = s + f.cube_root(a + b);
    return checked(f, "T5", target, {e, s, e});
  }
  if (a == b) {
    const Elem s = f.cube_root(c);
    const Elem e = f.cube_root(a + c) + s;
    return checked(f, "T5", target, {e, e, s});
  }
  const Elem den = f.cube(a + c) + f.cube(b + c);
  const Elem cden = f.cube_root(den);
  const Elem A1 = f.div(f.mul(a + c, f.cube_root(a + b)), cden);
  const Elem B1 = f.mul(f.div(b + c, a + c), A1);
  const Elem a4 = f.sqr(f.sqr(a)), b4 = f.sqr(f.sqr(b));
  const Elem z = f.cube_root(f.div(a4 + b4, den) + c) +
                 f.div(f.cube_root(f.pow(a + b, 4)), cden);
  return checked(f, "T5", target, {A1 + z, B1 + z, z});
}

Triple invert_T1_resolvent(const Field& f, const Triple& target) {
  require_odd(f);
  const Elem w1 = target.x, w2 = target.y, w3 = target.z;
  // phi turns F into H = (x^3+y^3, y^3+z^3, xy^2+yz^2+x^2z).
  const Elem a = w2 + w3, b = w1 + w3, c = w1 + w2 + w3;
  const ResolventCoeffs r = resolvent_coeffs(f, a, b, c);

  if (r.A.is_zero()) {
    if (a == b && b == c) {
      const Elem s = f.cube_root(a);
      return checked(f, "T1", target, {s, Elem{}, s});
    }
    if (b.is_zero() && a == c) {
      const Elem s = f.cube_root(a);
      return checked(f, "T1", target, {Elem{}, s, s});
    }
    if (a.is_zero() && b == c) {
      // Here target = (w1, 0, 0) = sigma(0, w1, 0), and F commutes with sigma.
      const Triple q = invert_T1_resolvent(f, {Elem{}, w1, Elem{}});
      return checked(f, "T1", target, rotate(q));
    }
    fail(ErrorCode::kFormulaInconsistent, "A = 0 outside the three classified cases");
  }

  const std::vector<Elem> roots = f.cubic_roots(f.div(r.B, r.A), f.div(r.C, r.A), f.div(r.D, r.A));
  std::vector<Triple> found;
  for (Elem Y : roots) {
    const Elem x = f.cube_root(a + Y), y = f.cube_root(Y), z = f.cube_root(b + Y);
    const Elem p3 = f.mul(x, f.sqr(y)) + f.mul(y, f.sqr(z)) + f.mul(f.sqr(x), z);
    if (p3 == c) found.push_back({x, y, z});
  }
  if (found.empty()) fail(ErrorCode::kNoPreimage, "no resolvent root survives the filter");
  if (found.size() > 1) fail(ErrorCode::kMultiplePreimages, "several resolvent roots survive the filter");
  return checked(f, "T1", target, found.front());
}

InverseTable::InverseTable(const Field& field, Coeffs coeffs) : field_(field), coeffs_(coeffs) {
  if (field.m() > kMaxDegree) {
    fail(ErrorCode::kDomainTooLarge, "inverse tables are limited to m <= 7");
  }
  const std::uint64_t q = field.size();
  const std::uint64_t points = q * q * q;
  std::vector<std::uint32_t> image(points);
  parallel_for(q, [&](std::size_t x) {
    for (std::uint64_t yz = 0; yz < q * q; ++yz) {
      const std::uint64_t idx = (std::uint64_t{x} << (2 * field.m())) | yz;
      image[idx] = static_cast<std::uint32_t>(
          point_index(field, eval_F(field, coeffs, point_at(field, idx))));
    }
  });
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  preimage_.assign(points, kUnset);
  for (std::uint64_t idx = 0; idx < points; ++idx) {
    if (preimage_[image[idx]] != kUnset) {
      fail(ErrorCode::kNotAPermutation,
           "family " + coeffs.to_bitstring() + " is not a permutation at m=" + std::to_string(field.m()));
    }
    preimage_[image[idx]] = static_cast<std::uint32_t>(idx);
  }
}

Triple InverseTable::operator()(const Triple& target) const {
  if (!field_.contains(target.x) || !field_.contains(target.y) || !field_.contains(target.z)) {
    fail(ErrorCode::kInvalidArgument, "target outside the field");
  }
  return point_at(field_, preimage_[point_index(field_, target)]);
}

Triple invert_table(const Field& field, Coeffs coeffs, const Triple& target) {
  return InverseTable(field, coeffs)(target);
}

std::string_view to_string(InvertMethod method) {
  switch (method) {
    case InvertMethod::kAuto: return "auto";
    case InvertMethod::kClosedForm: return "closed-form";
    case InvertMethod::kResolvent: return "resolvent";
    case InvertMethod::kTable: return "table";
  }
  return "?";
}

InvertMethod parse_invert_method(std::string_view text) {
  if (text == "auto") return InvertMethod::kAuto;
  if (text == "closed" || text == "closed-form") return InvertMethod::kClosedForm;
  if (text == "resolvent") return InvertMethod::kResolvent;
  if (text == "table") return InvertMethod::kTable;
  fail(ErrorCode::kInvalidArgument, "unknown inversion method '" + std::string(text) + "'");
}

Inversion invert(const Field& field, std::string_view family, const Triple& target,
                 InvertMethod method) {
  const Coeffs coeffs = named_coeffs(family);
  if (method == InvertMethod::kAuto) {
    if (family == "T1") {
      method = InvertMethod::kResolvent;
    } else if (family == "T2") {
      method = InvertMethod::kTable;
    } else {
      method = InvertMethod::kClosedForm;
    }
  }
  Triple pre;
  switch (method) {
    case InvertMethod::kResolvent:
      if (family != "T1") fail(ErrorCode::kInvalidArgument, "the resolvent method applies to T1 only");
      pre = invert_T1_resolvent(field, target);
      break;
    case InvertMethod::kClosedForm:
      if (family == "T3") {
        pre = invert_T3(field, target);
      } else if (family == "T4") {
        pre = invert_T4(field, target);
      } else if (family == "T5") {
        pre = invert_T5(field, target);
      } else {
        fail(ErrorCode::kInvalidArgument, "no closed form for " + std::string(family));
      }
      break;
    case InvertMethod::kTable:
      if (field.m() % 2 == 0) fail(ErrorCode::kOddDegreeRequired, "inversion needs odd m");
      pre = invert_table(field, coeffs, target);
      break;
    case InvertMethod::kAuto:
      break;
  }
  return {target, pre, method};
}

}  // namespace rotaperm
