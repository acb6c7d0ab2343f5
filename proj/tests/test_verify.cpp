#include "bimagic/verify.hpp"

#include <gtest/gtest.h>

#include <random>

#include "bimagic/document.hpp"
#include "bimagic/errors.hpp"
#include "oracles.hpp"

using namespace bimagic;

namespace {

std::string S(Wide v) { return to_string(v); }

std::vector<LineSet> lines_for(const Grid& g) {
  return line_sets(g.order(), default_block_shape(g.order()));
}

TEST(Magic, ThreeByThreeFixture) {
  const Grid g = oracle::from_rows({0, 1, 2}, 2, oracle::kMagic3x3);
  const auto lines = lines_for(g);
  const SumCheck m = check_magic(g, lines);
  ASSERT_TRUE(m.holds);
  EXPECT_EQ(S(*m.constant), "33");
  EXPECT_EQ(m.violation_count, 0u);
  EXPECT_FALSE(check_bimagic(g, lines).holds);
}

TEST(Magic, UnequalRowsReported) {
  const Grid g = oracle::from_rows({0, 1, 2}, 2,
                                   {{"00", "01", "02"},
                                    {"10", "11", "12"},
                                    {"20", "21", "22"}});
  const SumCheck m = check_magic(g, lines_for(g));
  EXPECT_FALSE(m.holds);
  EXPECT_FALSE(m.constant.has_value());
  ASSERT_GT(m.violation_count, 0u);
  bool saw_row = false;
  for (const auto& v : m.violations) saw_row |= v.kind == LineKind::kRows;
  EXPECT_TRUE(saw_row);
}

TEST(Magic, ViolationCap) {
  const Grid g = oracle::shuffled_complete({0, 1}, 8, 16, 4);
  CheckOptions opts;
  opts.max_violations = 3;
  const SumCheck m = check_magic(g, lines_for(g), opts);
  EXPECT_FALSE(m.holds);
  EXPECT_LE(m.violations.size(), 3u);
  EXPECT_GE(m.violation_count, m.violations.size());
}

TEST(Magic, GeneratedConstants) {
  struct Case {
    int order;
    const char* s1;
    const char* s2;
  };
  for (const Case& c : {Case{16, "88888888", "897867554657688"},
                        Case{8, "444444", "44893328844"},
                        Case{9, "9999", "17169495"}}) {
    const Grid g = oracle::generated(c.order, 1);
    const auto lines = lines_for(g);
    const SumCheck m = check_magic(g, lines);
    const SumCheck b = check_bimagic(g, lines);
    const SumCheck bm = check_block_magic(g, lines);
    const SumCheck bb = check_block_bimagic(g, lines);
    ASSERT_TRUE(m.holds && b.holds && bm.holds && bb.holds) << c.order;
    EXPECT_EQ(S(*m.constant), c.s1);
    EXPECT_EQ(S(*b.constant), c.s2);
    EXPECT_EQ(S(*bm.constant), c.s1);
    EXPECT_EQ(S(*bb.constant), c.s2);
  }
}

TEST(Magic, BlockChecksIgnorePrincipalLines) {
  // Every 2x2 block sums to 22 but the main diagonal is all zeros.
  const Grid g = oracle::from_rows({0, 1}, 2,
                                   {{"00", "11", "00", "11"},
                                    {"11", "00", "11", "00"},
                                    {"00", "11", "00", "11"},
                                    {"11", "00", "11", "00"}});
  const auto lines = line_sets(4, {2, 2});
  EXPECT_TRUE(check_block_magic(g, lines).holds);
  EXPECT_FALSE(check_magic(g, lines).holds);
}

TEST(Balance, GeneratedGridsBalanced) {
  for (int order : {8, 9, 16}) {
    const Grid g = oracle::generated(order, 2);
    const StructureCheck b = check_digit_balance(g, lines_for(g));
    EXPECT_TRUE(b.applicable);
    EXPECT_TRUE(b.holds) << order;
  }
}

TEST(Balance, MagicWithoutBalance) {
  const Grid g = oracle::from_rows(
      {0, 1, 2}, 2, {{"11", "11", "11"}, {"11", "11", "11"}, {"11", "11", "11"}});
  const auto lines = lines_for(g);
  EXPECT_TRUE(check_magic(g, lines).holds);
  const StructureCheck b = check_digit_balance(g, lines);
  EXPECT_TRUE(b.applicable);
  EXPECT_FALSE(b.holds);
  EXPECT_GT(b.violation_count, 0u);
}

TEST(Balance, NotApplicableForIndivisibleOrder) {
  const Grid g = oracle::from_rows({0, 1}, 1,
                                   {{"0", "1", "0"}, {"1", "0", "1"}, {"0", "1", "0"}});
  const auto lines = lines_for(g);
  EXPECT_FALSE(check_digit_balance(g, lines).applicable);
  EXPECT_FALSE(check_pair_uniformity(g, lines).applicable);
}

TEST(PairUniformity, NineAndSixteen) {
  for (int order : {9, 16}) {
    const Grid g = oracle::generated(order, 5);
    const StructureCheck p = check_pair_uniformity(g, lines_for(g));
    EXPECT_TRUE(p.applicable);
    EXPECT_TRUE(p.holds) << order;
  }
}

// The order-8 construction is pair-uniform on rows, columns and blocks but
// not on the diagonals, which are balanced only.
TEST(PairUniformity, EightFailsOnlyOnDiagonals) {
  for (std::uint64_t seed : {1, 2, 3}) {
    const Grid g = oracle::generated(8, seed);
    const StructureCheck p = check_pair_uniformity(g, lines_for(g));
    EXPECT_FALSE(p.holds);
    for (const auto& v : p.violations) {
      EXPECT_TRUE(v.kind == LineKind::kMainDiagonal ||
                  v.kind == LineKind::kAntiDiagonal)
          << to_string(v.kind);
    }
    std::vector<LineSet> off_diagonal;
    for (const auto& s : lines_for(g))
      if (s.kind == LineKind::kRows || s.kind == LineKind::kColumns ||
          s.kind == LineKind::kBlocks)
        off_diagonal.push_back(s);
    EXPECT_TRUE(check_pair_uniformity(g, off_diagonal).holds);
    EXPECT_TRUE(check_digit_balance(g, lines_for(g)).holds);
  }
}

TEST(PairUniformity, BalancedButSkewed) {
  const Grid g = oracle::from_rows({0, 1}, 2,
                                   {{"00", "00", "11", "11"},
                                    {"11", "11", "00", "00"},
                                    {"00", "00", "11", "11"},
                                    {"11", "11", "00", "00"}});
  const auto lines = line_sets(4, {2, 2});
  EXPECT_TRUE(check_digit_balance(g, lines).holds);
  const StructureCheck p = check_pair_uniformity(g, lines);
  EXPECT_TRUE(p.applicable);
  EXPECT_FALSE(p.holds);
}

TEST(Universality, EightAndNine) {
  for (int order : {8, 9}) {
    const Grid g = oracle::generated(order, 1);
    const auto u = check_universal(g, default_block_shape(order));
    EXPECT_TRUE(u.rotation.applicable);
    EXPECT_TRUE(u.rotation.universal_bimagic);
    EXPECT_TRUE(u.rotation.same_constants);
    EXPECT_TRUE(u.mirror.applicable);
    EXPECT_TRUE(u.mirror.universal);
  }
  const auto bin = check_universal(oracle::generated(8, 1), {2, 4});
  EXPECT_TRUE(bin.mirror.same_constants);
  EXPECT_TRUE(bin.mirror.universal_bimagic);
}

TEST(Universality, TernaryMirrorConstantsByHand) {
  const Grid g = oracle::generated(9, 4);
  const ImageVerdict v = check_image(g, {3, 3}, TransformKind::kMirror);
  ASSERT_TRUE(v.universal);
  EXPECT_FALSE(v.same_constants);
  EXPECT_EQ(v.alphabet->to_string(), "015");

  // Reflect by hand: reverse column order and each entry, 2 -> 5.
  oracle::Rows rows = oracle::rows_of(g);
  oracle::Rows image(9);
  for (int r = 0; r < 9; ++r) {
    for (int c = 8; c >= 0; --c) {
      std::string s(rows[r][c].rbegin(), rows[r][c].rend());
      for (char& ch : s)
        if (ch == '2') ch = '5';
      image[r].push_back(s);
    }
  }
  const auto sums1 = oracle::principal_sums(image, 1);
  const auto sums2 = oracle::principal_sums(image, 2);
  ASSERT_TRUE(oracle::all_equal(sums1));
  EXPECT_EQ(S(sums1[0]), "19998");
  EXPECT_EQ(S(*v.magic.constant), "19998");
  if (oracle::all_equal(sums2)) {
    EXPECT_TRUE(v.universal_bimagic);
    EXPECT_EQ(S(*v.bimagic.constant), S(sums2[0]));
  } else {
    EXPECT_FALSE(v.universal_bimagic);
  }
}

TEST(Universality, RotationBreaker) {
  const Grid g = oracle::from_rows({2, 5, 6, 8, 9}, 1, oracle::kRotationBreaker);
  const auto lines = line_sets(4, {2, 2});
  const SumCheck m = check_magic(g, lines);
  ASSERT_TRUE(m.holds);
  EXPECT_EQ(S(*m.constant), "22");
  const auto u = check_universal(g, {2, 2});
  EXPECT_TRUE(u.rotation.applicable);
  EXPECT_FALSE(u.rotation.universal);
  EXPECT_FALSE(u.mirror.applicable);
  EXPECT_FALSE(u.mirror.reason.empty());
  EXPECT_FALSE(u.mirror.universal);
}

TEST(Universality, MatchesExplicitTransform) {
  std::vector<Grid> corpus = {oracle::generated(8, 7), oracle::generated(9, 7),
                              oracle::shuffled_complete({0, 1, 2}, 4, 9, 3),
                              oracle::from_rows({0, 1, 2}, 2, oracle::kMagic3x3)};
  for (const Grid& g : corpus) {
    const BlockShape shape = default_block_shape(g.order());
    const auto u = check_universal(g, shape);
    for (const ImageVerdict* v : {&u.rotation, &u.mirror}) {
      const Grid image = apply_transform(g, v->kind).grid;
      const auto lines = line_sets(g.order(), shape);
      EXPECT_EQ(v->universal, check_magic(image, lines).holds);
      EXPECT_EQ(v->universal_bimagic, check_magic(image, lines).holds &&
                                          check_bimagic(image, lines).holds);
    }
  }
}

TEST(FullReport, EightPublishedRecords) {
  const Grid g = oracle::generated(8, 1);
  const VerificationReport r = full_report(g, {2, 4});
  EXPECT_TRUE(r.passes());
  ASSERT_EQ(r.published.size(), 2u);
  EXPECT_EQ(r.published[0].constant, "S1");
  EXPECT_EQ(r.published[0].printed, "44444");
  EXPECT_EQ(r.published[0].computed, "444444");
  EXPECT_FALSE(r.published[0].matches);
  EXPECT_TRUE(r.published[1].matches);
}

TEST(FullReport, RandomArrangementIsCompleteButNotMagic) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Grid g = oracle::shuffled_complete({0, 1}, 6, 8, seed);
    const VerificationReport r = full_report(g, {2, 4});
    EXPECT_TRUE(r.completeness.complete);
    EXPECT_FALSE(r.magic.holds);
    EXPECT_FALSE(r.passes());
  }
}

TEST(FullReport, DuplicateEntryIncomplete) {
  oracle::Rows rows = oracle::kMagic3x3;
  rows[0][0] = rows[0][1];
  const VerificationReport r =
      full_report(oracle::from_rows({0, 1, 2}, 2, rows), {3, 1});
  EXPECT_FALSE(r.completeness.complete);
  EXPECT_EQ(r.completeness.missing.size(), 1u);
  EXPECT_EQ(r.completeness.duplicates.size(), 1u);
  EXPECT_FALSE(r.passes());
}

TEST(FullReport, JsonDeterministic) {
  const Grid g = oracle::generated(9, 3);
  EXPECT_EQ(report_to_json(full_report(g, {3, 3})).dump(),
            report_to_json(full_report(g, {3, 3})).dump());
}

// Verifier verdicts agree with plain loop sums on a varied corpus.
TEST(NaiveAgreement, Corpus) {
  std::vector<Grid> corpus;
  for (int order : {8, 9, 16})
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
      corpus.push_back(oracle::generated(order, seed));
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    corpus.push_back(oracle::shuffled_complete({0, 1}, 6, 8, seed));
    corpus.push_back(oracle::shuffled_complete({0, 1, 2}, 2, 3, seed));
  }
  corpus.push_back(oracle::from_rows({0, 1, 2}, 2, oracle::kMagic3x3));
  corpus.push_back(oracle::from_rows({2, 5, 6, 8, 9}, 1, oracle::kRotationBreaker));
  for (const Grid& g : corpus) {
    const BlockShape shape = default_block_shape(g.order());
    const auto lines = line_sets(g.order(), shape);
    const auto rows = oracle::rows_of(g);
    EXPECT_EQ(check_magic(g, lines).holds,
              oracle::all_equal(oracle::principal_sums(rows, 1)));
    EXPECT_EQ(check_bimagic(g, lines).holds,
              oracle::all_equal(oracle::principal_sums(rows, 2)));
    EXPECT_EQ(check_block_magic(g, lines).holds,
              oracle::all_equal(oracle::block_sums(rows, shape.rows, shape.cols, 1)));
    EXPECT_EQ(check_block_bimagic(g, lines).holds,
              oracle::all_equal(oracle::block_sums(rows, shape.rows, shape.cols, 2)));
  }
}

// Balanced lines are magic; balanced and pair-uniform lines are bimagic.
TEST(Implications, BalanceAndPairs) {
  for (int order : {8, 9, 16}) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const Grid g = oracle::generated(order, seed);
      const auto lines = lines_for(g);
      for (const auto& s : lines) {
        const std::vector<LineSet> one = {s};
        const bool balanced = check_digit_balance(g, one).holds;
        const bool pairs = check_pair_uniformity(g, one).holds;
        const SumCheck m = s.kind == LineKind::kBlocks
                               ? check_block_magic(g, one)
                               : check_magic(g, one);
        const SumCheck b = s.kind == LineKind::kBlocks
                               ? check_block_bimagic(g, one)
                               : check_bimagic(g, one);
        if (balanced) EXPECT_TRUE(m.holds) << order << " " << to_string(s.kind);
        if (balanced && pairs) EXPECT_TRUE(b.holds);
      }
    }
  }
}

}  // namespace
