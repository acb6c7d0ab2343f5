#include "bimagic/digitspace.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bimagic/errors.hpp"
#include "oracles.hpp"

using namespace bimagic;

namespace {

std::string str(Wide v) { return to_string(v); }

TEST(Alphabet, CanonicalisesOrder) {
  EXPECT_EQ(Alphabet({2, 0, 1}).to_string(), "012");
  EXPECT_EQ(Alphabet({1, 0}), Alphabet({0, 1}));
  EXPECT_EQ(Alphabet::parse("10").digits(), (std::vector<int>{0, 1}));
}

TEST(Alphabet, RejectsInvalid) {
  EXPECT_THROW(Alphabet(std::vector<int>{}), InputError);
  EXPECT_THROW(Alphabet({0, 0}), InputError);
  EXPECT_THROW(Alphabet({0, 10}), InputError);
  EXPECT_THROW(Alphabet({-1}), InputError);
  EXPECT_THROW(Alphabet::parse("0a"), InputError);
}

TEST(Entry, KeepsLeadingZeros) {
  const Entry e = Entry::parse("000000");
  EXPECT_EQ(e.width(), 6);
  EXPECT_EQ(entry_value(e), 0);
  EXPECT_NE(Entry::parse("0"), Entry::parse("00"));
}

TEST(Entry, Value) {
  EXPECT_EQ(entry_value(Entry::parse("101010")), 101010);
  EXPECT_EQ(entry_value(Entry::parse("2101")), 2101);
  EXPECT_EQ(entry_value(Entry::parse("999999999999999999")),
            999999999999999999LL);
}

TEST(Entry, RejectsInvalid) {
  EXPECT_THROW(Entry::parse(""), InputError);
  EXPECT_THROW(Entry::parse("12a"), InputError);
  EXPECT_THROW(Entry::parse("1234567890123456789"), InputError);
}

TEST(EnumerateEntries, BinarySixDigits) {
  const auto entries = enumerate_entries(Alphabet({0, 1}), 6);
  ASSERT_EQ(entries.size(), 64u);
  EXPECT_EQ(entries.front().text(), "000000");
  EXPECT_EQ(entries.back().text(), "111111");
  EXPECT_TRUE(std::is_sorted(entries.begin(), entries.end()));
}

TEST(EnumerateEntries, TernaryFourDigits) {
  EXPECT_EQ(enumerate_entries(Alphabet({0, 1, 2}), 4).size(), 81u);
}

TEST(EnumerateEntries, SingleDigitAlphabet) {
  const auto entries = enumerate_entries(Alphabet({0}), 3);
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].text(), "000");
}

TEST(EnumerateEntries, RejectsBadWidth) {
  EXPECT_THROW(enumerate_entries(Alphabet({0, 1}), 0), InputError);
  EXPECT_THROW(enumerate_entries(Alphabet({0, 1}), kMaxWidth + 1), InputError);
}

// |A|^w distinct entries, matching an independent base-|A| counter.
TEST(EnumerateEntries, MatchesCounterForRandomAlphabets) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> digits;
    for (int d = 0; d < 10; ++d)
      if (rng() % 3 == 0) digits.push_back(d);
    if (digits.empty()) digits.push_back(static_cast<int>(rng() % 10));
    const int width = 1 + static_cast<int>(rng() % 4);
    const auto entries = enumerate_entries(Alphabet(digits), width);
    const auto expected = oracle::all_strings(digits, width);
    ASSERT_EQ(entries.size(), expected.size());
    std::set<std::string> seen;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      EXPECT_EQ(entries[i].text(), expected[i]);
      seen.insert(entries[i].text());
    }
    EXPECT_EQ(seen.size(), entries.size());
  }
}

TEST(SumTargets, OrderEight) {
  const auto t = sum_targets(Alphabet({0, 1}), 6, 8);
  const auto o = oracle::brute_targets({0, 1}, 6, 8);
  EXPECT_EQ(str(t.s1), str(o.s1));
  EXPECT_EQ(str(t.s2), str(o.s2));
  EXPECT_EQ(str(t.s1), "444444");
  EXPECT_EQ(str(t.s2), "44893328844");
}

TEST(SumTargets, OrderSixteen) {
  const auto t = sum_targets(Alphabet({0, 1}), 8, 16);
  const auto o = oracle::brute_targets({0, 1}, 8, 16);
  EXPECT_EQ(str(t.s1), str(o.s1));
  EXPECT_EQ(str(t.s2), str(o.s2));
  EXPECT_EQ(str(t.s1), "88888888");
  EXPECT_EQ(str(t.s2), "897867554657688");
}

TEST(SumTargets, OrderNine) {
  const auto t = sum_targets(Alphabet({0, 1, 2}), 4, 9);
  const auto o = oracle::brute_targets({0, 1, 2}, 4, 9);
  EXPECT_EQ(str(t.s1), str(o.s1));
  EXPECT_EQ(str(t.s2), str(o.s2));
  EXPECT_EQ(str(t.s1), "9999");
  EXPECT_EQ(str(t.s2), "17169495");
}

TEST(SumTargets, ShapeMismatch) {
  EXPECT_THROW(sum_targets(Alphabet({0, 1}), 5, 8), ShapeError);
  EXPECT_THROW(sum_targets(Alphabet({0, 1}), 6, 0), ShapeError);
  EXPECT_THROW(sum_targets_by_position(Alphabet({0, 1, 2}), 3, 9), ShapeError);
}

// Both routes agree with brute force for every square-tiling digit set.
TEST(SumTargets, PositionalFormulaAgreesWithBruteForce) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 40; ++trial) {
    std::vector<int> digits;
    for (int d = 0; d < 10; ++d)
      if (rng() % 2 == 0) digits.push_back(d);
    if (digits.size() < 2 || digits.size() > 4) continue;
    for (int width = 1; width <= 8; ++width) {
      std::int64_t size = 1;
      for (int k = 0; k < width; ++k) size *= static_cast<std::int64_t>(digits.size());
      if (size > 70000) break;
      int order = 1;
      while (std::int64_t{order} * order < size) ++order;
      if (std::int64_t{order} * order != size) continue;
      const Alphabet a(digits);
      Wide total = 0;
      Wide total_sq = 0;
      for (const auto& s : oracle::all_strings(digits, width)) {
        total += std::stoll(s);
        total_sq += Wide{std::stoll(s)} * std::stoll(s);
      }
      if (total % order != 0 || total_sq % order != 0) {
        EXPECT_THROW(sum_targets(a, width, order), ShapeError);
        EXPECT_THROW(sum_targets_by_position(a, width, order), ShapeError);
        continue;
      }
      const auto brute = oracle::brute_targets(digits, width, order);
      const auto direct = sum_targets(a, width, order);
      const auto positional = sum_targets_by_position(a, width, order);
      EXPECT_EQ(str(direct.s1), str(brute.s1));
      EXPECT_EQ(str(direct.s2), str(brute.s2));
      EXPECT_EQ(direct, positional);
      // S1 = per-position digit total / order * repunit(width).
      EXPECT_EQ(str(direct.s1 * order),
                str(Wide{size / static_cast<std::int64_t>(digits.size())} *
                    a.digit_sum() * repunit(width)));
      ++checked;
    }
  }
  EXPECT_GE(checked, 20);
}

TEST(SumTargets, DependsOnlyOnDigitSet) {
  EXPECT_EQ(sum_targets(Alphabet({2, 1, 0}), 4, 9),
            sum_targets(Alphabet({0, 1, 2}), 4, 9));
}

TEST(Repunit, Values) {
  EXPECT_EQ(str(repunit(1)), "1");
  EXPECT_EQ(str(repunit(6)), "111111");
}

TEST(WideToString, Negative) {
  EXPECT_EQ(str(Wide{-120}), "-120");
  EXPECT_EQ(str(Wide{0}), "0");
}

TEST(Published, OrderEightErratum) {
  auto cmp = compare_with_published(Alphabet({0, 1}), 6, 8, Wide{444444},
                                    Wide{44893328844});
  ASSERT_EQ(cmp.size(), 2u);
  EXPECT_EQ(cmp[0].constant, "S1");
  EXPECT_EQ(cmp[0].printed, "44444");
  EXPECT_FALSE(cmp[0].matches);
  EXPECT_TRUE(cmp[1].matches);
}

TEST(Published, OrderNineHasTwoPrintsForS2) {
  auto cmp = compare_with_published(Alphabet({0, 1, 2}), 4, 9, Wide{9999},
                                    Wide{17169495});
  ASSERT_EQ(cmp.size(), 3u);
  EXPECT_TRUE(cmp[0].matches);
  EXPECT_EQ(cmp[1].printed, "17169395");
  EXPECT_FALSE(cmp[1].matches);
  EXPECT_EQ(cmp[2].printed, "17169495");
  EXPECT_TRUE(cmp[2].matches);
}

TEST(Published, UnknownDigitSet) {
  EXPECT_TRUE(compare_with_published(Alphabet({0, 1}), 4, 4, Wide{1}, Wide{1})
                  .empty());
  EXPECT_FALSE(published_constants(Alphabet({0, 1, 2}), 4, 8).has_value());
}

}  // namespace
