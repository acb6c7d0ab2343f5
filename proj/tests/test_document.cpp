#include "bimagic/document.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace bimagic;

namespace {

ParseError parse_failure(const std::string& text) {
  try {
    parse_grid_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return ParseError(0, 0, "");
}

const char* kSmall =
    "order=3 alphabet=012 width=2\n"
    "01 20 12\n"
    "22 11 00\n"
    "10 02 21\n";

TEST(Document, SerializeLayout) {
  GridDocument doc{oracle::from_rows({0, 1, 2}, 2, oracle::kMagic3x3),
                   BlockShape{3, 1}, 42, "rotate180"};
  EXPECT_EQ(serialize_grid_document(doc),
            "order=3 alphabet=012 width=2 blocks=3x1 seed=42 "
            "provenance=rotate180\n"
            "01 20 12\n22 11 00\n10 02 21\n");
  doc.blocks.reset();
  doc.seed.reset();
  doc.provenance.clear();
  EXPECT_EQ(serialize_grid_document(doc), kSmall);
}

TEST(Document, RoundTripCorpus) {
  std::vector<GridDocument> corpus;
  for (int order : {8, 9, 16})
    for (std::uint64_t seed : {1, 2})
      corpus.push_back({oracle::generated(order, seed),
                        default_block_shape(order), seed, ""});
  corpus.push_back({oracle::from_rows({2, 5, 6, 8, 9}, 1, oracle::kRotationBreaker),
                    std::nullopt, std::nullopt, "mirror,rotate180"});
  corpus.push_back({oracle::shuffled_complete({0, 1}, 6, 8, 9), BlockShape{4, 2},
                    std::uint64_t{18446744073709551615ull}, ""});
  for (const auto& doc : corpus) {
    const std::string text = serialize_grid_document(doc);
    const GridDocument back = parse_grid_document(text);
    EXPECT_EQ(back, doc);
    EXPECT_EQ(serialize_grid_document(back), text);
  }
}

TEST(Document, CommentsBlankLinesAndKeyOrder) {
  const GridDocument doc = parse_grid_document(
      "# leading comment\n"
      "\n"
      "width=2 seed=7 alphabet=210 order=3\r\n"
      "  # indented comment\n"
      "01  20\t12\n"
      "22 11 00\n"
      "\n"
      "10 02 21\n");
  EXPECT_EQ(doc.grid, oracle::from_rows({0, 1, 2}, 2, oracle::kMagic3x3));
  EXPECT_EQ(doc.seed, 7u);
  EXPECT_FALSE(doc.blocks.has_value());
}

TEST(Document, Errors) {
  struct Case {
    std::string text;
    int line;
    int column;
  };
  const std::vector<Case> cases = {
      {"", 1, 1},
      {"order=3 width=2\n01 20 12\n", 1, 1},
      {"order=3 alphabet=012 width=2 colour=red\n", 1, 30},
      {"order=x alphabet=012 width=2\n", 1, 1},
      {"order=3 alphabet=012 width=2 blocks=2x2\n", 1, 1},
      {"order=3 alphabet=012 width=2 junk\n", 1, 30},
      {"order=3 alphabet=012 width=2\n01 20 12\n22 11 00\n", 4, 1},
      {"order=3 alphabet=012 width=2\n01 20 12\n22 11\n10 02 21\n", 3, 6},
      {"order=3 alphabet=012 width=2\n01 20 12 00\n22 11 00\n10 02 21\n", 2, 10},
      {"order=3 alphabet=012 width=2\n01 20 12\n22 11 00\n10 02 21\n00\n", 5, 1},
      {"order=3 alphabet=012 width=2\n01 20 12\n22 1x 00\n10 02 21\n", 3, 4},
      {"order=3 alphabet=012 width=2\n01 20 12\n22 11 00\n10 32 21\n", 4, 4},
      {"order=3 alphabet=012 width=2\n01 20 12\n22 110 00\n10 02 21\n", 3, 4},
  };
  for (const auto& c : cases) {
    const ParseError e = parse_failure(c.text);
    EXPECT_EQ(e.line(), c.line) << c.text << "\n" << e.what();
    EXPECT_EQ(e.column(), c.column) << c.text << "\n" << e.what();
  }
}

TEST(Document, ReportJsonKeyOrder) {
  const auto report = full_report(oracle::generated(9, 1), {3, 3});
  const auto j = report_to_json(report);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  ASSERT_FALSE(keys.empty());
  EXPECT_EQ(keys.front(), "order");
  EXPECT_TRUE(j.at("passes").get<bool>());
  const auto& published = j.at("published");
  ASSERT_EQ(published.size(), 3u);
  EXPECT_EQ(published[0].at("status"), "match");
  EXPECT_EQ(published[1].at("status"), "erratum");
  EXPECT_EQ(published[2].at("printed"), "17169495");
  EXPECT_EQ(published[2].at("status"), "match");
  const std::string text = report_to_text(report);
  EXPECT_NE(text.find("verdict: PASS"), std::string::npos);
}

TEST(Document, OracleJsonVerdicts) {
  const Alphabet a({0, 1, 2});
  const auto found = oracle_search(3, a, 2, OracleProperty::kMagic);
  EXPECT_EQ(oracle_to_json(found, 3, a, 2, OracleProperty::kMagic).at("verdict"),
            "feasible");
  const auto none = oracle_search(3, a, 2, OracleProperty::kBimagic);
  EXPECT_EQ(oracle_to_json(none, 3, a, 2, OracleProperty::kBimagic).at("verdict"),
            "infeasible");
}

TEST(Document, CrosscheckText) {
  const auto c = closed_form_targets_crosscheck(8);
  const std::string text = crosscheck_to_text(c);
  EXPECT_NE(text.find("444444"), std::string::npos);
  EXPECT_NE(text.find("44444"), std::string::npos);
  EXPECT_EQ(crosscheck_to_json(c).at("published")[0].at("status"), "erratum");
}

}  // namespace
