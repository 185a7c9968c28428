#include <gtest/gtest.h>

#include "cantor/serialize.hpp"
#include "support/artifacts.hpp"

using namespace cantor;

namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse_artifact(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ParseError(Errc::Parse, 0, "");
}

}  // namespace

TEST(Serialize, WorkedExamples) {
  EXPECT_EQ(parse_as<DyadicMeasure>("measure depth=1 mass=1/1\n0 1/2\n1 1/2"), DyadicMeasure::uniform(1));
  const auto p = parse_as<PointConfig>("ppconfig depth=2 n=2\n00\n01");
  EXPECT_EQ(p.words(), (std::vector<Word>{Word::parse("00"), Word::parse("01")}));
  const auto e = parse_error("measure depth=1 mass=1/1\n0 1/2\n1 1/3");
  EXPECT_EQ(e.code(), Errc::MassMismatch);
  EXPECT_EQ(e.line(), 3U);
}

TEST(Serialize, ReportsLineNumbersForBadInput) {
  EXPECT_EQ(parse_error("# header next\nfoo depth=1\n").code(), Errc::UnknownHeader);
  EXPECT_EQ(parse_error("# header next\nfoo depth=1\n").line(), 2U);
  auto e = parse_error("measure depth=1 mass=1/1\n0 1/2\n\n1 -1/2\n");
  EXPECT_EQ(e.code(), Errc::NegativeWeight);
  EXPECT_EQ(e.line(), 4U);
  e = parse_error("measure depth=1 mass=1/1\n1 1/2\n0 1/2\n");
  EXPECT_EQ(e.line(), 2U);
  e = parse_error("kernel level=1 depth=1 quasi=0\nrow 0 mass=0/1\n0 0\n1 0\nrow 1 mass=1\n0 1\n1 0\n");
  EXPECT_EQ(e.code(), Errc::RowMassInvalid);
  EXPECT_EQ(e.line(), 2U);
  e = parse_error("tower levels=2\nmeasure depth=1 mass=1\n0 1/2\n1 1/2\nmeasure depth=2 mass=1\n00 0\n01 0\n10 0\n11 1\n");
  EXPECT_EQ(e.code(), Errc::ConsistencyViolation);
  EXPECT_EQ(e.line(), 5U);
  e = parse_error("tree depth=2\n2\n2.1\n3.0\n");
  EXPECT_EQ(e.code(), Errc::NotPrefixClosed);
  EXPECT_EQ(e.line(), 4U);
  e = parse_error("ppconfig depth=2 n=2\n00\n");
  EXPECT_EQ(e.code(), Errc::Parse);
  e = parse_error("cylset depth=1\n0\nextra words\n");
  EXPECT_EQ(e.line(), 3U);
  EXPECT_EQ(parse_error("measure depth=13 mass=1\n").code(), Errc::DepthCapExceeded);
}

TEST(Serialize, CommentsAndBlankLinesAreIgnored) {
  const auto m = parse_as<DyadicMeasure>("# fair coin\n\nmeasure depth=1 mass=1  # total\n0 1/2\n# middle\n1 1/2\n");
  EXPECT_EQ(m, DyadicMeasure::uniform(1));
}

TEST(Serialize, ParseSerializeParseIsIdentity) {
  oracle::Rng rng(61);
  for (std::size_t kind = 0; kind < oracle::kArtifactKinds; ++kind) {
    for (int trial = 0; trial < 100; ++trial) {
      const Artifact a = oracle::random_artifact(rng, kind);
      const std::string text = serialize(a);
      const Artifact b = parse_artifact(text);
      EXPECT_EQ(a, b) << text;
      EXPECT_EQ(serialize(b), text);
    }
  }
}
