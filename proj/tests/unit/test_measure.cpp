#include <gtest/gtest.h>

#include "cantor/error.hpp"
#include "cantor/measure.hpp"
#include "support/oracles.hpp"

using namespace cantor;

namespace {

DyadicMeasure leaves(int depth, std::vector<Rational> w) { return DyadicMeasure::from_leaves(depth, std::move(w)); }

CylinderSet set_of(int depth, std::initializer_list<const char*> words) {
  std::vector<Word> ws;
  for (const char* w : words) ws.push_back(Word::parse(w));
  return CylinderSet::from_words(depth, ws);
}

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

const DyadicMeasure kBiased = leaves(2, {Rational(1, 8), Rational(3, 8), Rational(1, 8), Rational(3, 8)});

}  // namespace

TEST(FromLeafWeights, WorkedExamples) {
  EXPECT_EQ(DyadicMeasure::from_leaf_weights(1, {Rational(1, 2), Rational(1, 2)}, Rational(1)), DyadicMeasure::uniform(1));
  EXPECT_TRUE(kBiased.is_probability());
  EXPECT_EQ(code_of([] { DyadicMeasure::from_leaf_weights(1, {Rational(1, 2), Rational(-1, 2)}, Rational(0)); }),
            Errc::NegativeWeight);
  EXPECT_EQ(code_of([] { DyadicMeasure::from_leaf_weights(1, {Rational(1, 2), Rational(1, 3)}, Rational(1)); }),
            Errc::MassMismatch);
  EXPECT_EQ(code_of([] { DyadicMeasure::from_leaves(13, std::vector<Rational>(8192)); }), Errc::DepthCapExceeded);
  EXPECT_NO_THROW(DyadicMeasure::from_leaves(13, std::vector<Rational>(8192), 13));
}

TEST(CylinderMass, WorkedExamples) {
  EXPECT_EQ(cylinder_mass(DyadicMeasure::uniform(2), set_of(1, {"0"})), Rational(1, 2));
  EXPECT_EQ(cylinder_mass(kBiased, CylinderSet::empty(2)), Rational(0));
  EXPECT_EQ(cylinder_mass(kBiased, set_of(2, {"01", "11"})), Rational(3, 4));
  EXPECT_EQ(code_of([] { cylinder_mass(DyadicMeasure::uniform(1), CylinderSet::full(2)); }), Errc::DepthExceeded);
}

TEST(CylinderMass, AgreesWithLeafOracleAndIsAdditive) {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = oracle::uniform_int(rng, 0, 5);
    const auto m = oracle::random_measure(rng, d, Rational(oracle::uniform_int(rng, 1, 5), 3));
    const auto a = oracle::random_set(rng, oracle::uniform_int(rng, 0, d));
    const auto b = oracle::random_set(rng, oracle::uniform_int(rng, 0, d));
    EXPECT_EQ(cylinder_mass(m, a), oracle::set_mass(m, a));
    EXPECT_EQ(cylinder_mass(m, unite(a, b)) + cylinder_mass(m, intersect(a, b)), cylinder_mass(m, a) + cylinder_mass(m, b));
  }
}

TEST(BitMarginal, WorkedExamples) {
  EXPECT_EQ(bit_marginal(DyadicMeasure::uniform(2), Parity::Odd), DyadicMeasure::uniform(1));
  EXPECT_EQ(bit_marginal(kBiased, Parity::Odd), leaves(1, {Rational(1, 4), Rational(3, 4)}));
  EXPECT_EQ(bit_marginal(kBiased, Parity::Even), leaves(1, {Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(code_of([] { bit_marginal(DyadicMeasure::uniform(1), Parity::Odd); }), Errc::DepthTooSmall);
}

TEST(BitMarginal, MatchesImageOracle) {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = oracle::random_measure(rng, oracle::uniform_int(rng, 2, 7));
    EXPECT_TRUE(oracle::table_matches(bit_marginal(m, Parity::Odd), oracle::image(m, oracle::odd_bits)));
    EXPECT_TRUE(oracle::table_matches(bit_marginal(m, Parity::Even), oracle::image(m, oracle::even_bits)));
  }
}

TEST(ProductInterleaved, WorkedExamples) {
  EXPECT_EQ(product_interleaved(DyadicMeasure::uniform(1), DyadicMeasure::uniform(1)), DyadicMeasure::uniform(2));
  EXPECT_EQ(product_interleaved(DyadicMeasure::point_mass(Word::parse("0")), DyadicMeasure::point_mass(Word::parse("1"))),
            DyadicMeasure::point_mass(Word::parse("01")));
  EXPECT_EQ(product_interleaved(DyadicMeasure::uniform(1), leaves(1, {Rational(1, 4), Rational(3, 4)})), kBiased);
  EXPECT_EQ(code_of([] { product_interleaved(DyadicMeasure::uniform(1), DyadicMeasure::uniform(2)); }),
            Errc::DepthMismatch);
  EXPECT_EQ(code_of([] { product_interleaved(DyadicMeasure::zero(1), DyadicMeasure::uniform(1)); }),
            Errc::NotProbability);
}

TEST(ProductInterleaved, MarginalsRecoverFactors) {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = oracle::uniform_int(rng, 1, 4);
    const auto a = oracle::random_measure(rng, d);
    const auto b = oracle::random_measure(rng, d);
    const auto p = product_interleaved(a, b);
    EXPECT_EQ(bit_marginal(p, Parity::Odd), b);
    EXPECT_EQ(bit_marginal(p, Parity::Even), a);
  }
}

TEST(RhoDistance, WorkedExamples) {
  EXPECT_EQ(rho_distance(kBiased, kBiased, 6), Rational(0));
  const auto d0 = DyadicMeasure::point_mass(Word::parse("0"));
  const auto d1 = DyadicMeasure::point_mass(Word::parse("1"));
  EXPECT_EQ(rho_distance(d0, d1, 2), Rational(3, 4));
  EXPECT_EQ(rho_distance(DyadicMeasure::uniform(1), leaves(1, {Rational(1, 4), Rational(3, 4)}), 2), Rational(3, 16));
  EXPECT_EQ(code_of([&] { rho_distance(d0, d1, 3); }), Errc::DepthExceeded);
}

TEST(RhoDistance, MetricPropertiesAgainstOracle) {
  oracle::Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = oracle::uniform_int(rng, 1, 4);
    const auto a = oracle::random_measure(rng, d), b = oracle::random_measure(rng, d), c = oracle::random_measure(rng, d);
    const auto k = basis_count_through(d);
    const auto ab = rho_distance(a, b, k);
    EXPECT_EQ(ab, oracle::rho([&](const auto& w) { return oracle::prefix_mass(a, w); },
                              [&](const auto& w) { return oracle::prefix_mass(b, w); }, d, k));
    EXPECT_EQ(ab, rho_distance(b, a, k));
    EXPECT_LE(rho_distance(a, c, k), ab + rho_distance(b, c, k));
    EXPECT_EQ(ab.is_zero(), a == b);
  }
}

TEST(DiagonalExtract, ConstantSequenceKeepsEverything) {
  const auto r = diagonal_extract(MeasureSeq({kBiased, kBiased, kBiased}));
  EXPECT_EQ(r.indices, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(r.limit, kBiased);
}

TEST(DiagonalExtract, AlternatingSequenceKeepsFirstValue) {
  const auto mu = DyadicMeasure::uniform(2);
  const auto r = diagonal_extract(MeasureSeq({mu, kBiased, mu, kBiased, mu, kBiased}));
  EXPECT_EQ(r.indices, (std::vector<std::size_t>{0, 2, 4}));
  EXPECT_EQ(r.limit, mu);
}

TEST(DiagonalExtract, DistinctValuesFollowLongestMonotoneRun) {
  std::vector<DyadicMeasure> seq;
  for (int n = 0; n < 10; ++n) {
    const Rational a = Rational(1, 2) + Rational(1, n + 2);
    seq.push_back(leaves(1, {a, Rational(1) - a}));
  }
  const auto r = diagonal_extract(MeasureSeq(seq));
  EXPECT_EQ(r.limit.leaf(0), Rational(13, 22));
  // No longer monotone subsequence exists: check every subset of the ten indices.
  std::size_t best = 0;
  for (unsigned mask = 1; mask < (1U << 10); ++mask) {
    std::vector<Rational> vals;
    for (int i = 0; i < 10; ++i) {
      if ((mask >> i) & 1U) vals.push_back(seq[static_cast<std::size_t>(i)].leaf(0));
    }
    const bool up = std::is_sorted(vals.begin(), vals.end());
    const bool down = std::is_sorted(vals.rbegin(), vals.rend());
    if (up || down) best = std::max(best, vals.size());
  }
  EXPECT_EQ(r.indices.size(), best);
}

TEST(DiagonalExtract, ValidatesSequence) {
  EXPECT_EQ(code_of([] { MeasureSeq({}); }), Errc::EmptySequence);
  EXPECT_EQ(code_of([] { MeasureSeq({DyadicMeasure::uniform(1), DyadicMeasure::uniform(2)}); }), Errc::DepthMismatch);
}

TEST(PullbackExact, WorkedExamples) {
  const auto u = DyadicMeasure::uniform(2);
  EXPECT_EQ(pullback_exact(u, CylinderSet::full(2)), u);
  const auto half = leaves(2, {Rational(1, 2), Rational(1, 2), Rational(0), Rational(0)});
  EXPECT_EQ(pullback_exact(half, set_of(2, {"00", "01"})), half);
  try {
    pullback_exact(u, set_of(2, {"00", "01", "10"}));
    FAIL();
  } catch (const NotThickError& e) {
    EXPECT_EQ(e.word().str(), "11");
    EXPECT_EQ(e.mass(), Rational(1, 4));
  }
}

TEST(InnerOuter, WorkedExamples) {
  const auto u = DyadicMeasure::uniform(2);
  auto io = inner_outer(u, 2, set_of(2, {"00"}));
  EXPECT_EQ(io.inner, Rational(1, 4));
  EXPECT_EQ(io.outer, Rational(1, 4));
  io = inner_outer(u, 1, set_of(2, {"00"}));
  EXPECT_EQ(io.inner, Rational(0));
  EXPECT_EQ(io.outer, Rational(1, 2));
  const auto m = leaves(2, {Rational(1, 2), Rational(0), Rational(1, 2), Rational(0)});
  io = inner_outer(m, 1, set_of(2, {"00"}));
  EXPECT_EQ(io.inner, Rational(0));
  EXPECT_EQ(io.outer, Rational(1, 2));
  EXPECT_FALSE(io.equal());
  io = inner_outer(m, 1, set_of(2, {"00", "01"}));
  EXPECT_TRUE(io.equal());
  EXPECT_EQ(io.inner, Rational(1, 2));
  EXPECT_EQ(code_of([&] { inner_outer(m, 3, set_of(2, {"00"})); }), Errc::LevelExceeded);
}
