#include <gtest/gtest.h>

#include "rotaperm/error.hpp"
#include "rotaperm/json_io.hpp"

using namespace rotaperm;

TEST(JsonIo, PermReportShape) {
  const Field f(3);
  const Json ok = to_json(is_permutation(f, named_coeffs("T3")));
  EXPECT_EQ(ok["family"], "00000011");
  EXPECT_EQ(ok["m"], 3);
  EXPECT_EQ(ok["permutation"], true);
  EXPECT_EQ(ok["points"], 512);
  EXPECT_FALSE(ok.contains("witness"));

  const Json bad = to_json(is_permutation(f, Coeffs::parse("11000000")));
  EXPECT_EQ(bad["permutation"], false);
  ASSERT_TRUE(bad.contains("witness"));
  ASSERT_EQ(bad["witness"].size(), 2u);
  EXPECT_EQ(bad["witness"][0].size(), 3u);
  EXPECT_EQ(bad["witness"][0][0].get<std::string>().rfind("0x", 0), 0u);
}

TEST(JsonIo, InversionShape) {
  const Field f(3);
  const Inversion inv = invert(f, "T3", Triple{Elem{1}, Elem{2}, Elem{3}}, InvertMethod::kAuto);
  const Json j = to_json(inv);
  EXPECT_EQ(j["target"], Json::array({"0x1", "0x2", "0x3"}));
  EXPECT_EQ(j["method"], "closed-form");
  EXPECT_EQ(j["preimage"].size(), 3u);
}

TEST(JsonIo, LiftedRoundTrip) {
  const ExtField ext{Field(3)};
  const LiftedPoly p = lift_permutation(ext, named_coeffs("T2"));
  const Json j = to_json(ext, p);
  EXPECT_EQ(j["m"], 3);
  ASSERT_EQ(j["cubic"].size(), 4u);
  EXPECT_EQ(j["cubic"][3], "0x1");
  EXPECT_EQ(j["terms"].size(), p.term_count());
  EXPECT_EQ(lifted_from_json(ext, j), p);
  EXPECT_EQ(lifted_from_json(ext, Json::parse(j.dump())), p);
}

TEST(JsonIo, LiftedRejectsMismatch) {
  const ExtField ext{Field(3)};
  Json j = to_json(ext, lift_permutation(ext, named_coeffs("T3")));
  Json wrong_m = j;
  wrong_m["m"] = 5;
  EXPECT_THROW(lifted_from_json(ext, wrong_m), Error);
  Json wrong_cubic = j;
  wrong_cubic["cubic"][0] = "0x7";
  if (j["cubic"][0] != "0x7") EXPECT_THROW(lifted_from_json(ext, wrong_cubic), Error);
  try {
    lifted_from_json(ext, Json::parse(R"({"m":3})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
  }
  Json big_e = j;
  big_e["terms"][0]["e"] = 512;
  EXPECT_THROW(lifted_from_json(ext, big_e), Error);
}

TEST(JsonIo, CertAndSearchShape) {
  const Json c = to_json(certify_all("factorizations"));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0]["name"], "factorizations");
  EXPECT_EQ(c[0]["status"], "pass");
  EXPECT_FALSE(c[0].contains("diff"));

  const std::vector<unsigned> ms{3, 5};
  const Json s = to_json(search_all(ms));
  EXPECT_EQ(s["m"], Json::array({3, 5}));
  EXPECT_TRUE(s["results"].contains("3"));
  EXPECT_EQ(s["counts"]["3"], s["results"]["3"].size());
  EXPECT_TRUE(s["candidates"].is_array());
  EXPECT_LT(s["candidates"].size(), s["intersection"].size());
}
