#include <gtest/gtest.h>

#include "cantor/error.hpp"
#include "cantor/selectors.hpp"
#include "support/oracles.hpp"

using namespace cantor;

namespace {

ClosedTree example_tree() { return ClosedTree::from_nodes(2, {{2}, {5}, {2, 3}, {2, 1}}); }

}  // namespace

TEST(ClosedTree, PrunesDeadEndsAndValidates) {
  const auto t = example_tree();
  EXPECT_FALSE(t.contains({5}));
  EXPECT_EQ(t.children({}), (std::vector<unsigned>{2}));
  EXPECT_EQ(t.children({2}), (std::vector<unsigned>{1, 3}));
  try {
    ClosedTree::from_nodes(2, {{2, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPrefixClosed);
  }
  try {
    ClosedTree::from_nodes(1, {{4}}, std::vector<unsigned>{3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BoundViolated);
  }
  EXPECT_TRUE(ClosedTree::from_nodes(2, {{1}}).empty());
}

TEST(LeastBranch, WorkedExamples) {
  EXPECT_EQ(least_branch(example_tree(), 2), (NatWord{2, 1}));
  EXPECT_EQ(least_branch(ClosedTree::from_nodes(3, {{4}, {4, 0}, {4, 0, 7}}), 3), (NatWord{4, 0, 7}));
  EXPECT_EQ(least_branch(ClosedTree::from_nodes(2, {{0}, {0, 0}}), 2), (NatWord{0, 0}));
  try {
    least_branch(ClosedTree::from_nodes(2, {{1}}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyTree);
  }
  try {
    least_branch(example_tree(), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LengthExceeded);
  }
}

TEST(Retract, WorkedExamples) {
  const auto t = example_tree();
  EXPECT_EQ(retract(t, {2, 3}), (NatWord{2, 3}));
  EXPECT_EQ(retract(t, {2, 9}), (NatWord{2, 1}));
  EXPECT_EQ(retract(t, {7, 0}), (NatWord{2, 1}));
}

TEST(LeastBranch, MatchesBruteForceOnRandomTrees) {
  oracle::Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const int depth = oracle::uniform_int(rng, 1, 4);
    const auto nodes = oracle::random_tree_nodes(rng, depth, 3, 0.5);
    const auto t = ClosedTree::from_nodes(depth, nodes);
    for (int len = 0; len <= depth; ++len) {
      const auto brute = oracle::brute_branches(nodes, depth, len, 3);
      if (brute.empty()) {
        EXPECT_THROW(least_branch(t, len), Error);
        continue;
      }
      EXPECT_EQ(least_branch(t, len), *std::min_element(brute.begin(), brute.end()));
      for (const auto& b : brute) EXPECT_EQ(retract(t, b), b);
    }
  }
}

TEST(Retract, IdempotentAndLandsInTree) {
  oracle::Rng rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    const int depth = oracle::uniform_int(rng, 1, 4);
    const auto t = ClosedTree::from_nodes(depth, oracle::random_tree_nodes(rng, depth, 3, 0.6));
    if (t.empty()) continue;
    NatWord w;
    for (int i = oracle::uniform_int(rng, 0, depth); i > 0; --i) w.push_back(static_cast<unsigned>(oracle::uniform_int(rng, 0, 4)));
    const auto r = retract(t, w);
    EXPECT_EQ(r.size(), w.size());
    EXPECT_TRUE(r.empty() || t.contains(r));
    EXPECT_EQ(retract(t, r), r);
  }
}

TEST(NatWord, TextRoundTrip) {
  EXPECT_EQ(nat_word_str({2, 1, 0}), "2.1.0");
  EXPECT_EQ(parse_nat_word("2.1.0"), (NatWord{2, 1, 0}));
  EXPECT_EQ(parse_nat_word("-"), NatWord{});
  EXPECT_THROW(parse_nat_word("2..1"), Error);
}
