#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "rotaperm/error.hpp"
#include "rotaperm/family.hpp"
#include "rotaperm/permcheck.hpp"

using namespace rotaperm;

namespace {

MPoly P(const char* text) { return MPoly::parse(text); }

Coeffs C(const char* bits) { return Coeffs::parse(bits); }

Triple scale(const Field& f, Elem l, const Triple& v) { return {f.mul(l, v.x), f.mul(l, v.y), f.mul(l, v.z)}; }

}  // namespace

TEST(FamilyFromCoeffs, Examples) {
  EXPECT_EQ(family_from_coeffs(C("00000011")).f, P("x^3+yz^2+y^2z"));
  EXPECT_EQ(family_from_coeffs(C("00000000")).f, P("x^3"));
  EXPECT_EQ(family_from_coeffs(C("10011010")).f, P("x^3+y^3+x^2z+xy^2+yz^2"));
}

TEST(FamilyFromCoeffs, InvariantsForAll256) {
  const char* monos[8] = {"y^3", "z^3", "x^2y", "xy^2", "x^2z", "xz^2", "yz^2", "y^2z"};
  for (unsigned mask = 0; mask < 256; ++mask) {
    const FamilySpec fam = family_from_coeffs(Coeffs(static_cast<std::uint8_t>(mask)));
    MPoly expected = P("x^3");
    for (unsigned i = 0; i < 8; ++i) {
      if ((mask >> i) & 1u) expected += P(monos[i]);
    }
    ASSERT_EQ(fam.f, expected);
    ASSERT_EQ(fam.f.homogeneous_degree(), std::optional<unsigned>(3));
    ASSERT_EQ(fam.F[0], fam.f);
    ASSERT_TRUE(is_rotatable(fam.F));
    ASSERT_EQ(Coeffs::parse(fam.coeffs.to_bitstring()), fam.coeffs);
  }
}

TEST(NamedFamily, Table) {
  EXPECT_EQ(named_family("T1").f, P("x^3+y^3+x^2z+xy^2+yz^2"));
  EXPECT_EQ(named_family("T2").f, P("x^3+x^2y+xy^2+x^2z+yz^2"));
  EXPECT_EQ(named_family("T3").f, P("x^3+yz^2+y^2z"));
  EXPECT_EQ(named_family("T4").f, P("x^3+y^3+x^2y+x^2z+yz^2"));
  EXPECT_EQ(named_family("T5").f, P("x^3+x^2y+xy^2+x^2z+xz^2"));
  EXPECT_EQ(named_family("T3").coeffs.to_bitstring(), "00000011");
  EXPECT_EQ(named_family("T5").coeffs.to_bitstring(), "00111100");
  EXPECT_EQ(named_family("T4").name, std::optional<std::string>("T4"));
  EXPECT_EQ(family_from_coeffs(C("10011010")).name, std::optional<std::string>("T1"));
  EXPECT_EQ(family_from_coeffs(C("11111111")).name, std::nullopt);
  try {
    named_family("T9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownName);
  }
}

TEST(Coeffs, ParseErrors) {
  for (const char* bad : {"0000001", "000000011", "0000002x"}) {
    try {
      Coeffs::parse(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
    }
  }
}

TEST(EvalF, Examples) {
  const Field f(3);
  const Coeffs t3 = named_coeffs("T3");
  EXPECT_EQ(eval_F(f, t3, {Elem{1}, Elem{1}, Elem{1}}), (Triple{Elem{1}, Elem{1}, Elem{1}}));
  for (unsigned mask = 0; mask < 256; ++mask) {
    EXPECT_EQ(eval_F(f, Coeffs(static_cast<std::uint8_t>(mask)), Triple{}), Triple{});
  }
  const auto o = oracle::gf3();
  const std::uint32_t g = 2, g2 = o.mul(g, g);
  const Triple img = eval_F(f, t3, {Elem{1}, Elem{g}, Elem{g2}});
  EXPECT_EQ(img.x.bits, o.f(t3.mask(), 1, g, g2));
  EXPECT_EQ(img.y.bits, o.f(t3.mask(), g, g2, 1));
  EXPECT_EQ(img.z.bits, o.f(t3.mask(), g2, 1, g));
}

TEST(EvalF, MatchesMonomialOracleExhaustiveM3) {
  const Field f(3);
  const auto o = oracle::gf3();
  for (unsigned mask = 0; mask < 256; mask += 7) {
    const Coeffs c(static_cast<std::uint8_t>(mask));
    for (std::uint64_t idx = 0; idx < 512; ++idx) {
      const Triple p = point_at(f, idx);
      const Triple img = eval_F(f, c, p);
      ASSERT_EQ(img.x.bits, o.f(c.mask(), p.x.bits, p.y.bits, p.z.bits));
      ASSERT_EQ(img.y.bits, o.f(c.mask(), p.y.bits, p.z.bits, p.x.bits));
      ASSERT_EQ(img.z.bits, o.f(c.mask(), p.z.bits, p.x.bits, p.y.bits));
    }
  }
}

TEST(EvalF, SymbolicNumericAgreementM3) {
  const Field f(3);
  for (auto name : kNamedFamilies) {
    const FamilySpec fam = named_family(name);
    for (std::uint64_t idx = 0; idx < 512; ++idx) {
      const Triple p = point_at(f, idx);
      const std::map<char, Elem> at{{'x', p.x}, {'y', p.y}, {'z', p.z}};
      const Triple img = eval_F(f, fam, p);
      ASSERT_EQ(img.x, fam.F[0].evaluate(f, at));
      ASSERT_EQ(img.y, fam.F[1].evaluate(f, at));
      ASSERT_EQ(img.z, fam.F[2].evaluate(f, at));
    }
  }
}

TEST(EvalF, EquivarianceExhaustiveM3) {
  const Field f(3);
  for (unsigned mask = 0; mask < 256; ++mask) {
    const Coeffs c(static_cast<std::uint8_t>(mask));
    for (std::uint64_t idx = 0; idx < 512; ++idx) {
      const Triple p = point_at(f, idx);
      ASSERT_EQ(eval_F(f, c, rotate(p)), rotate(eval_F(f, c, p)));
    }
  }
}

TEST(EvalF, EquivarianceSampled) {
  std::mt19937_64 rng(31);
  for (unsigned m : {5u, 7u}) {
    const Field f(m);
    for (int i = 0; i < 1000; ++i) {
      const Coeffs c(static_cast<std::uint8_t>(rng() % 256));
      const Triple p = point_at(f, rng() % (std::uint64_t{f.size()} * f.size() * f.size()));
      ASSERT_EQ(eval_F(f, c, rotate(p)), rotate(eval_F(f, c, p)));
    }
  }
}

TEST(EvalF, HomogeneityExhaustiveM3) {
  const Field f(3);
  for (auto name : kNamedFamilies) {
    const Coeffs c = named_coeffs(name);
    for (std::uint32_t l = 0; l < 8; ++l) {
      const Elem lam{l}, lam3 = f.cube(lam);
      for (std::uint64_t idx = 0; idx < 512; ++idx) {
        const Triple p = point_at(f, idx);
        ASSERT_EQ(eval_F(f, c, scale(f, lam, p)), scale(f, lam3, eval_F(f, c, p)));
      }
    }
  }
}

TEST(EvalF, HomogeneitySampled) {
  std::mt19937_64 rng(32);
  for (unsigned m : {5u, 7u}) {
    const Field f(m);
    for (int i = 0; i < 1000; ++i) {
      const Coeffs c(static_cast<std::uint8_t>(rng() % 256));
      const Elem lam{static_cast<std::uint32_t>(rng() % f.size())};
      const Triple p = point_at(f, rng() % (std::uint64_t{f.size()} * f.size() * f.size()));
      ASSERT_EQ(eval_F(f, c, scale(f, lam, p)), scale(f, f.cube(lam), eval_F(f, c, p)));
    }
  }
}

TEST(Rotatable, Examples) {
  EXPECT_TRUE(is_rotatable(named_family("T2").F));
  EXPECT_FALSE(is_rotatable({P("x^3"), P("y^3"), P("x^3")}));
  EXPECT_TRUE(is_rotatable({P("x^3"), P("y^3"), P("z^3")}));
  EXPECT_FALSE(is_rotatable(li_nikolay_F1()));
  EXPECT_FALSE(is_rotatable(li_nikolay_F2()));
  EXPECT_EQ(rotate_vars(P("x^2*y"), 3), P("x^2*y"));
}

TEST(NecessaryCondition, Examples) {
  EXPECT_TRUE(necessary_condition(3, 8));
  EXPECT_FALSE(necessary_condition(3, 4));
  for (std::uint64_t q : {2u, 4u, 8u, 16u, 1024u}) EXPECT_TRUE(necessary_condition(1, q));
  for (unsigned m = 1; m <= 12; ++m) EXPECT_EQ(necessary_condition(3, 1ull << m), m % 2 == 1) << m;
  EXPECT_THROW(necessary_condition(3, 6), Error);
}
