#include <gtest/gtest.h>

#include <algorithm>

#include "rotaperm/error.hpp"
#include "rotaperm/permcheck.hpp"
#include "rotaperm/search.hpp"

using namespace rotaperm;

namespace {

std::vector<std::string> strings(const std::vector<Coeffs>& v) {
  std::vector<std::string> out;
  for (Coeffs c : v) out.push_back(c.to_bitstring());
  return out;
}

bool contains(const std::vector<Coeffs>& v, const char* bits) {
  return std::find(v.begin(), v.end(), Coeffs::parse(bits)) != v.end();
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no rotaperm::Error thrown";
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(SearchM, M3ContainsNamedAndMonomial) {
  const auto r = search_m(Field(3));
  for (const char* bits : {"10011010", "00111010", "00000011", "10101010", "00111100", "00000000"}) {
    EXPECT_TRUE(contains(r, bits)) << bits;
  }
  auto s = strings(r);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
}

TEST(SearchM, MatchesIsPermutationAndDifferenceCheck) {
  for (unsigned m : {3u, 5u}) {
    const Field f(m);
    std::vector<Coeffs> brute;
    for (unsigned i = 0; i < 256; ++i) {
      const Coeffs c(static_cast<std::uint8_t>(i));
      if (is_permutation(f, c).is_permutation) brute.push_back(c);
      if (m == 3) EXPECT_EQ(difference_check(f, c), is_permutation(f, c).is_permutation);
    }
    sort_by_bitstring(brute);
    EXPECT_EQ(search_m(f), brute) << "m=" << m;
  }
}

TEST(SearchAll, ThreeFiveSeven) {
  const std::vector<unsigned> ms{3, 5, 7};
  const SearchReport a = search_all(ms);
  const SearchReport b = search_all(ms);
  EXPECT_EQ(a.ms, ms);
  for (unsigned m : ms) {
    EXPECT_TRUE(a.contains_five_families.at(m));
    EXPECT_EQ(a.results.at(m), b.results.at(m));
    for (auto name : kNamedFamilies) {
      EXPECT_TRUE(std::find(a.results.at(m).begin(), a.results.at(m).end(), named_coeffs(name)) !=
                  a.results.at(m).end());
    }
  }
  EXPECT_EQ(a.intersection, b.intersection);
  for (Coeffs c : a.intersection) {
    for (unsigned m : ms) EXPECT_TRUE(std::find(a.results.at(m).begin(), a.results.at(m).end(), c) != a.results.at(m).end());
    EXPECT_TRUE(difference_check(Field(3), c));
  }
  const auto diff = search_diff(a);
  for (Coeffs c : diff) {
    EXPECT_NE(c.mask(), 0);
    for (auto name : kNamedFamilies) EXPECT_NE(c, named_coeffs(name));
  }
  EXPECT_EQ(diff.size() + 6, a.intersection.size());
}

TEST(SearchAll, Errors) {
  const std::vector<unsigned> even{3, 4};
  EXPECT_EQ(code_of([&] { search_all(even); }), ErrorCode::kEvenDegree);
  const std::vector<unsigned> big{9};
  EXPECT_EQ(code_of([&] { search_all(big); }), ErrorCode::kDomainTooLarge);
  const std::vector<unsigned> huge{11};
  EXPECT_EQ(code_of([&] { search_all(huge, true); }), ErrorCode::kDomainTooLarge);
  const std::vector<unsigned> one{3};
  EXPECT_EQ(code_of([&] { search_diff(search_all(one)); }), ErrorCode::kInvalidArgument);
}

TEST(SearchAll, GcdFilterVacuousForOddM) {
  // Every reported vector passes the necessary condition gcd(3, 2^m - 1) = 1.
  const std::vector<unsigned> ms{3, 5};
  const SearchReport r = search_all(ms);
  for (unsigned m : ms) {
    EXPECT_TRUE(necessary_condition(3, 1ull << m));
    EXPECT_FALSE(r.results.at(m).empty());
  }
}
