#include "reflendo/figures.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace reflendo;

TEST(Fig1, ProportionsSumToOnePerRank) {
  const auto d = fig1();
  std::map<std::string, Ratio> sums;
  for (const auto& row : d.rows) sums[row[0]] += make_ratio(CountInt(row[3]), CountInt(row[4]));
  EXPECT_EQ(sums.size(), 23u);
  for (const auto& [n, s] : sums) EXPECT_EQ(s, 1) << n;
  EXPECT_EQ(d.columns.size(), 6u);
}

TEST(Fig2, EndpointsAndShape) {
  const auto d = fig2();
  ASSERT_EQ(d.rows.size(), 22u);
  EXPECT_EQ(d.rows.front()[0], "4");
  EXPECT_EQ(d.rows.front()[3], "0.88177");
  EXPECT_EQ(d.rows.back()[0], "25");
  EXPECT_EQ(d.rows.back()[3], "0.49997");
}

TEST(Fig3, JumpsAtMultiplesOfP) {
  const auto d = fig3(13, 3, 50);
  std::map<unsigned, CountInt> by_n;
  for (const auto& row : d.rows)
    if (row[0] == "13") by_n[std::stoul(row[1])] = CountInt(row[2]);
  // The monomorphism stratum first appears at n = 13 and gains a term at 26 and 39.
  for (unsigned n : {13u, 26u, 39u}) {
    const CountInt base = 1 + involution_count(GroupId::C(n));
    EXPECT_GT(by_n[n], base) << n;
  }
  EXPECT_EQ(by_n[12], 1 + involution_count(GroupId::C(12)));
}

TEST(Fig3, IndependentOfPWhenPExceedsN) {
  const auto d = fig3(61, 3, 10);
  std::map<std::string, std::string> first;
  for (const auto& row : d.rows) {
    if (std::stoul(row[0]) <= std::stoul(row[1])) continue;
    auto [it, fresh] = first.emplace(row[1], row[2]);
    if (!fresh) EXPECT_EQ(it->second, row[2]) << "n=" << row[1];
  }
  EXPECT_EQ(d.rows.size(), 17u * 8u);  // 17 odd primes up to 61, n = 3..10
}

TEST(Figures, RangeChecks) {
  EXPECT_THROW(fig1(10, 5), std::out_of_range);
  EXPECT_THROW(fig2(4, kSweepLimit + 1), std::out_of_range);
  EXPECT_THROW(fig3(2, 3, 10), std::out_of_range);
}

TEST(Figures, DeterministicRendering) {
  EXPECT_EQ(to_csv(fig2()), to_csv(fig2()));
  const auto j = to_json(fig2(4, 5));
  EXPECT_EQ(j["rows"][0]["prob_float"], "0.88177");
  EXPECT_EQ(j["metadata"]["library_version"], kLibraryVersion);
}
