#include <gtest/gtest.h>

#include "cantor/cylinder.hpp"
#include "cantor/error.hpp"
#include "support/oracles.hpp"

using namespace cantor;

namespace {

CylinderSet set_of(int depth, std::initializer_list<const char*> words) {
  std::vector<Word> ws;
  for (const char* w : words) ws.push_back(Word::parse(w));
  return CylinderSet::from_words(depth, ws);
}

}  // namespace

TEST(Rational, ParsesAndPrintsCanonicalForm) {
  EXPECT_EQ(Rational::parse("2/4").str(), "1/2");
  EXPECT_EQ(Rational::parse("3").str(), "3/1");
  EXPECT_EQ(Rational::parse("-6/8"), Rational(-3, 4));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("1/x"), Error);
  EXPECT_EQ(Rational(2, 3).decimal(3), "0.667");
  EXPECT_EQ(Rational(-1, 8).decimal(2), "-0.13");
}

TEST(Word, ParseRoundTripsAndOrdersByDepthThenLex) {
  EXPECT_EQ(Word::parse("0110").str(), "0110");
  EXPECT_EQ(Word::parse("-").depth(), 0);
  EXPECT_LT(Word::parse("1"), Word::parse("00"));
  EXPECT_LT(Word::parse("01"), Word::parse("10"));
  EXPECT_TRUE(Word::parse("01").is_prefix_of(Word::parse("011")));
  EXPECT_THROW(Word::parse("012"), Error);
}

TEST(Refine, WorkedExamples) {
  EXPECT_EQ(refine(set_of(1, {"0"}), 2), set_of(2, {"00", "01"}));
  EXPECT_TRUE(refine(CylinderSet::empty(0), 3).is_empty());
  EXPECT_EQ(refine(set_of(2, {"01", "10"}), 3), set_of(3, {"010", "011", "100", "101"}));
}

TEST(Refine, RejectsShallowerTarget) {
  try {
    refine(set_of(2, {"01"}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TargetDepthTooSmall);
  }
}

TEST(BooleanOps, WorkedExamples) {
  EXPECT_TRUE(same_subset(unite(set_of(1, {"0"}), set_of(1, {"1"})), CylinderSet::full(0)));
  EXPECT_EQ(complement(set_of(2, {"01"})), set_of(2, {"00", "10", "11"}));
  EXPECT_EQ(intersect(set_of(1, {"0"}), set_of(2, {"01", "11"})), set_of(2, {"01"}));
}

TEST(BooleanOps, AgreeWithPointwiseMembership) {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int da = oracle::uniform_int(rng, 0, 4);
    const int db = oracle::uniform_int(rng, 0, 4);
    const auto a = oracle::random_set(rng, da);
    const auto b = oracle::random_set(rng, db);
    const int d = std::max(da, db);
    const auto u = unite(a, b), i = intersect(a, b), c = complement(a), m = difference(a, b);
    for (std::uint64_t leaf = 0; leaf < (1U << d); ++leaf) {
      const auto bits = oracle::bits_of(leaf, d);
      const bool ia = oracle::in_set(bits, a), ib = oracle::in_set(bits, b);
      EXPECT_EQ(oracle::in_set(bits, u), ia || ib);
      EXPECT_EQ(oracle::in_set(bits, i), ia && ib);
      EXPECT_EQ(oracle::in_set(bits, m), ia && !ib);
      if (d == da) {
        EXPECT_EQ(oracle::in_set(bits, c), !ia);
      }
    }
    EXPECT_TRUE(same_subset(a.coarsen(), a));
  }
}

TEST(DeltaPreimage, WorkedExamples) {
  EXPECT_EQ(delta_preimage(set_of(1, {"1"})), set_of(2, {"01", "11"}));
  EXPECT_TRUE(delta_preimage(CylinderSet::empty(1)).is_empty());
}

TEST(DeltaPreimage, MatchesBruteForceOverAllWords) {
  for (int d = 0; d <= 3; ++d) {
    for (std::uint64_t mask = 0; mask < (1U << (1U << d)); ++mask) {
      std::vector<std::uint64_t> leaves;
      for (std::uint64_t i = 0; i < (1U << d); ++i) {
        if ((mask >> i) & 1U) leaves.push_back(i);
      }
      const CylinderSet s(d, leaves);
      const auto pre = delta_preimage(s);
      ASSERT_EQ(pre.depth(), 2 * d);
      for (std::uint64_t w = 0; w < (1U << (2 * d)); ++w) {
        const auto odd = oracle::odd_bits(oracle::bits_of(w, 2 * d));
        EXPECT_EQ(pre.contains_leaf(w), s.contains_leaf(oracle::index_of(odd)));
      }
    }
  }
  // The depth-2 example {10}: positions 1 and 3 carry 1 and 0.
  EXPECT_EQ(delta_preimage(set_of(2, {"10"})), set_of(4, {"0100", "0110", "1100", "1110"}));
}

TEST(ThetaInterleave, WorkedExamplesAndDeltaRecoversSecond) {
  EXPECT_EQ(theta_interleave(Word::parse("0"), Word::parse("1")).str(), "01");
  EXPECT_EQ(theta_interleave(Word(), Word()).str(), "-");
  EXPECT_EQ(theta_interleave(Word::parse("01"), Word::parse("10")).str(), "0110");
  EXPECT_THROW(theta_interleave(Word::parse("0"), Word::parse("10")), Error);
  for (int d = 0; d <= 3; ++d) {
    for (std::uint64_t a = 0; a < (1U << d); ++a) {
      for (std::uint64_t b = 0; b < (1U << d); ++b) {
        const Word w = theta_interleave(Word(a, d), Word(b, d));
        EXPECT_EQ(delta_word(w), Word(b, d));
        EXPECT_EQ(even_word(w), Word(a, d));
      }
    }
  }
}

TEST(BinaryInterval, WorkedExamples) {
  EXPECT_EQ(binary_interval(Word::parse("1")), (DyadicInterval{Rational(1, 2), Rational(1)}));
  EXPECT_EQ(binary_interval(Word::parse("0")), (DyadicInterval{Rational(0), Rational(1, 2)}));
  EXPECT_EQ(binary_interval(Word::parse("01")), (DyadicInterval{Rational(1, 4), Rational(1, 2)}));
  EXPECT_THROW(binary_interval(Word()), Error);
}

TEST(EnumerateBasis, WorkedExamplesAndMatchesReferenceOrder) {
  EXPECT_EQ(enumerate_basis(1).str(), "0");
  EXPECT_EQ(enumerate_basis(2).str(), "1");
  EXPECT_EQ(enumerate_basis(5).str(), "10");
  const auto ref = oracle::basic_words_through(5);
  ASSERT_EQ(ref.size(), basis_count_through(5));
  for (std::size_t k = 0; k < ref.size(); ++k) {
    const Word w = enumerate_basis(k + 1);
    EXPECT_EQ(w, Word(oracle::index_of(ref[k]), static_cast<int>(ref[k].size())));
    EXPECT_EQ(basis_position(w), k + 1);
  }
}

TEST(InterleaveMap, WorkedExamples) {
  const std::vector<Word> two{Word::parse("0"), Word::parse("1")};
  EXPECT_EQ(interleave_map(two, round_robin_pairing(2, 2)).str(), "01");
  const std::vector<Word> one{Word::parse("101")};
  EXPECT_EQ(interleave_map(one, round_robin_pairing(1, 3)).str(), "101");
  const std::vector<Word> three{Word::parse("0"), Word::parse("1"), Word::parse("1")};
  EXPECT_EQ(interleave_map(three, round_robin_pairing(3, 3)).str(), "011");
}

TEST(InterleaveMap, RejectsIncompletePairing) {
  const std::vector<Word> two{Word::parse("0"), Word::parse("1")};
  try {
    interleave_map(two, Pairing{{0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PairingIncomplete);
  }
}
