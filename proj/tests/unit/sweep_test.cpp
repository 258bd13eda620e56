#include "strassen/sweep.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "strassen/errors.hpp"
#include "support/generators.hpp"

namespace strassen {
namespace {

Poset chain(Index size) {
  std::vector<IndexPair> pairs;
  for (Index i = 0; i + 1 < size; ++i) pairs.push_back({i, i + 1});
  return Poset::from_pairs(pairs, size);
}

// Shell-by-shell listing of the walk, built independently of the library.
std::vector<IndexPair> reference_walk(Index shells) {
  std::vector<IndexPair> out;
  for (Index s = 0; s < shells; ++s) {
    std::vector<IndexPair> shell;
    for (Index t = 0; t <= s; ++t) shell.push_back({t, s});
    for (Index t = s; t-- > 0;) shell.push_back({s, t});
    if (s % 2 == 1) std::reverse(shell.begin(), shell.end());
    out.insert(out.end(), shell.begin(), shell.end());
  }
  return out;
}

TEST(BoustrophedonTest, OpeningMoves) {
  std::vector<IndexPair> expected = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 2},
                                     {1, 2}, {2, 2}, {2, 1}, {2, 0}, {3, 0}};
  for (std::uint64_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(boustrophedon_point(i), expected[i]) << i;
  }
}

TEST(BoustrophedonTest, MatchesReferenceAndInverts) {
  std::vector<IndexPair> walk = reference_walk(30);
  for (std::uint64_t i = 0; i < walk.size(); ++i) {
    ASSERT_EQ(boustrophedon_point(i), walk[i]);
    ASSERT_EQ(boustrophedon_position(walk[i]), i);
  }
}

TEST(BoustrophedonTest, ConsecutivePointsAreNeighbours) {
  for (std::uint64_t i = 0; i + 1 < 2000; ++i) {
    IndexPair a = boustrophedon_point(i);
    IndexPair b = boustrophedon_point(i + 1);
    auto diff = [](Index x, Index y) { return x > y ? x - y : y - x; };
    ASSERT_EQ(diff(a.n, b.n) + diff(a.m, b.m), 1u);
  }
}

TEST(SweepTest, ChainOfThree) {
  Poset p = chain(3);
  EXPECT_EQ(sweep_sequence(1, p), (IndexPair{0, 1}));
  EXPECT_EQ(sweep_sequence(2, p), (IndexPair{0, 2}));
  EXPECT_EQ(sweep_sequence(3, p), (IndexPair{1, 2}));
  EXPECT_EQ(sweep_sequence(4, p), std::nullopt);
  EXPECT_EQ(sweep_length(p), 3u);
}

TEST(SweepTest, AntichainIsExhaustedImmediately) {
  Poset p = Poset::from_pairs({}, 4);
  EXPECT_EQ(sweep_sequence(1, p), std::nullopt);
  Sweep sweep(p);
  EXPECT_EQ(sweep.next(), std::nullopt);
}

TEST(SweepTest, RankBounds) {
  Poset total = Order::total().prefix(3);
  EXPECT_LE(boustrophedon_position({1, 2}) + 1, 9u);
  EXPECT_EQ(sweep_rank({1, 2}, total), 3u);
  EXPECT_THROW(sweep_rank({2, 1}, total), OrderError);
  EXPECT_THROW(sweep_rank({1, 1}, total), OrderError);
  EXPECT_THROW(sweep_sequence(0, total), DomainError);

  Poset big = Order::total().prefix(25);
  for (const IndexPair& pair : big.strict_pairs()) {
    Index top = std::max(pair.n, pair.m);
    ASSERT_LE(boustrophedon_position(pair) + 1, (top + 1) * (top + 1));
    ASSERT_LE(sweep_rank(pair, big), top * top);
  }
}

TEST(SweepTest, EveryPairExactlyOnceInWalkOrder) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    Poset p = testing::random_poset(8, rng);
    std::vector<IndexPair> expected;
    for (const IndexPair& q : reference_walk(8)) {
      if (p.less(q.n, q.m)) expected.push_back(q);
    }
    std::vector<IndexPair> got;
    Sweep sweep(p);
    while (auto q = sweep.next()) got.push_back(*q);
    ASSERT_EQ(got, expected);
    for (std::size_t k = 0; k < got.size(); ++k) {
      ASSERT_EQ(sweep_rank(got[k], p), k + 1);
    }
    sweep.restart();
    if (!expected.empty()) ASSERT_EQ(sweep.next(), expected.front());
  }
}

TEST(SweepTest, PrefixSweepIsPrefixOfLargerSweep) {
  Order order = Order::divisibility();
  Poset small = order.prefix(6);
  Poset large = order.prefix(15);
  for (std::size_t k = 1; k <= sweep_length(small); ++k) {
    ASSERT_EQ(sweep_sequence(k, small), sweep_sequence(k, large));
  }
}

}  // namespace
}  // namespace strassen
