#include <gtest/gtest.h>

#include "cantor/error.hpp"
#include "cantor/point_process.hpp"
#include "support/oracles.hpp"

using namespace cantor;

namespace {

PointConfig cfg(int depth, std::initializer_list<const char*> words) {
  std::vector<Word> ws;
  for (const char* w : words) ws.push_back(Word::parse(w));
  return PointConfig::from_words(depth, ws);
}

CylinderSet set_of(int depth, std::initializer_list<const char*> words) {
  std::vector<Word> ws;
  for (const char* w : words) ws.push_back(Word::parse(w));
  return CylinderSet::from_words(depth, ws);
}

}  // namespace

TEST(PpCount, WorkedExamples) {
  EXPECT_EQ(pp_count(cfg(2, {"00", "01"}), set_of(1, {"0"})), 2U);
  EXPECT_EQ(pp_count(cfg(2, {"00", "00"}), set_of(2, {"00"})), 2U);
  EXPECT_EQ(pp_count(cfg(2, {"00", "11", "11"}), set_of(2, {"01", "11"})), 2U);
  EXPECT_THROW(pp_count(cfg(1, {"0"}), set_of(2, {"00"})), Error);
}

TEST(RhoPp, WorkedExamples) {
  const auto p = cfg(2, {"00", "11"});
  EXPECT_EQ(rho_pp(p, p, 6), Rational(0));
  EXPECT_EQ(rho_pp(cfg(2, {"00"}), cfg(2, {"10"}), 6), Rational(29, 32));
  EXPECT_EQ(rho_pp(cfg(2, {"00", "11"}), cfg(2, {"11", "00"}), 3), Rational(0));
  try {
    rho_pp(cfg(1, {"0"}), cfg(2, {"00"}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DepthMismatch);
  }
}

TEST(RhoPp, AgreesWithCountingOracle) {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = oracle::uniform_int(rng, 1, 4);
    const auto p = oracle::random_config(rng, d, oracle::uniform_int(rng, 0, 4));
    const auto q = oracle::random_config(rng, d, oracle::uniform_int(rng, 0, 4));
    auto counter = [d](const PointConfig& c) {
      return [&c, d](const oracle::Bits& w) {
        long n = 0;
        for (auto i : c.points()) n += oracle::has_prefix(oracle::bits_of(i, d), w) ? 1 : 0;
        return Rational(n);
      };
    };
    const auto k = basis_count_through(d);
    EXPECT_EQ(rho_pp(p, q, k), oracle::rho(counter(p), counter(q), d, k));
  }
}

TEST(PpPushforward, WorkedExamples) {
  EXPECT_EQ(pp_pushforward(cfg(2, {"00", "01"}), WordMap::delta(2)), cfg(1, {"0", "1"}));
  const auto p = cfg(3, {"010", "111", "010"});
  EXPECT_EQ(pp_pushforward(p, WordMap::identity(3)), p);
  EXPECT_EQ(pp_pushforward(cfg(2, {"00", "10"}), WordMap::constant(2, Word::parse("1"))), cfg(1, {"1", "1"}));
}

TEST(PpPushforward, PartialMapIsRejected) {
  const WordMap partial(1, 1, {0, std::nullopt});
  try {
    pp_pushforward(cfg(1, {"0"}), partial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PartialMap);
  }
}

TEST(PpPushforward, IsFunctorialAndPreservesCount) {
  oracle::Rng rng(42);
  auto random_map = [&](int from, int to) {
    std::vector<std::optional<std::uint64_t>> t(std::size_t{1} << from);
    for (auto& e : t) e = static_cast<std::uint64_t>(oracle::uniform_int(rng, 0, (1 << to) - 1));
    return WordMap(from, to, std::move(t));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int d = oracle::uniform_int(rng, 0, 4), e = oracle::uniform_int(rng, 0, 4), c = oracle::uniform_int(rng, 0, 4);
    const auto f = random_map(d, e);
    const auto g = random_map(e, c);
    const auto p = oracle::random_config(rng, d, oracle::uniform_int(rng, 0, 5));
    EXPECT_EQ(pp_pushforward(p, compose(g, f)), pp_pushforward(pp_pushforward(p, f), g));
    EXPECT_EQ(pp_pushforward(p, f).n(), p.n());
  }
}

TEST(PpExtract, WorkedExamples) {
  const auto p = cfg(2, {"00", "01"});
  const auto q = cfg(2, {"11", "01"});
  const std::vector<PointConfig> constant{p, p, p};
  EXPECT_EQ(pp_extract(constant).indices, (std::vector<std::size_t>{0, 1, 2}));
  const std::vector<PointConfig> alt{p, q, p, q, p};
  const auto r = pp_extract(alt);
  EXPECT_EQ(r.indices, (std::vector<std::size_t>{0, 2, 4}));
  EXPECT_EQ(r.limit, p);
  const std::vector<PointConfig> distinct{cfg(1, {"1"}), cfg(1, {"0"})};
  EXPECT_EQ(pp_extract(distinct).limit, cfg(1, {"1"}));
}

TEST(PpExtract, Errors) {
  EXPECT_THROW(pp_extract(std::vector<PointConfig>{}), Error);
  const std::vector<PointConfig> mixed{cfg(1, {"1"}), cfg(1, {"0", "1"})};
  try {
    pp_extract(mixed);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MixedTotals);
  }
}
