#include "strassen/measure.hpp"

#include <gtest/gtest.h>

#include <random>

#include "strassen/coupling.hpp"
#include "strassen/errors.hpp"
#include "support/catalog.hpp"
#include "support/generators.hpp"

namespace strassen {
namespace {

using R = Rational;

Poset chain(Index size) {
  std::vector<IndexPair> pairs;
  for (Index i = 0; i + 1 < size; ++i) pairs.push_back({i, i + 1});
  return Poset::from_pairs(pairs, size);
}

TEST(FiniteMeasureTest, Validation) {
  FiniteMeasure mu({R(1, 2), R(0), R(1, 2)});
  EXPECT_EQ(mu.size(), 3u);
  EXPECT_EQ(mu[7], R(0));
  EXPECT_EQ(mu.support(), (IndexSet{0, 2}));
  EXPECT_THROW(FiniteMeasure({R(1, 2), R(1, 3)}), NormalizationError);
  EXPECT_THROW(FiniteMeasure({R(3, 2), R(-1, 2)}), NegativeMassError);
}

TEST(MeasureSourceTest, Geometric) {
  MeasureSource g = MeasureSource::geometric(R(1, 2));
  EXPECT_EQ(g.value_at(0), R(1, 2));
  EXPECT_EQ(g.value_at(3), R(1, 16));
  EXPECT_EQ(g.head_sum(2), R(7, 8));
  EXPECT_FALSE(g.last_support_index().has_value());
  EXPECT_THROW(MeasureSource::geometric(R(1)), DomainError);
  EXPECT_THROW(MeasureSource::geometric(R(0)), DomainError);
  EXPECT_THROW(MeasureSource::geometric(R(-1, 2)), DomainError);
}

TEST(MeasureSourceTest, HeadSumConsistentWithValues) {
  for (const R& q : {R(1, 2), R(2, 3), R(1, 7)}) {
    MeasureSource g = MeasureSource::geometric(q);
    R running;
    for (Index n = 0; n < 20; ++n) {
      running += g.value_at(n);
      ASSERT_EQ(g.head_sum(n), running);
      ASSERT_EQ(g.head_sum(n), R(1) - pow(q, static_cast<unsigned>(n + 1)));
    }
  }
  MeasureSource e = MeasureSource::explicit_values({R(1, 3), R(0), R(2, 3)});
  EXPECT_EQ(e.head_sum(0), R(1, 3));
  EXPECT_EQ(e.head_sum(1), R(1, 3));
  EXPECT_EQ(e.head_sum(9), R(1));
  EXPECT_EQ(e.value_at(9), R(0));
  EXPECT_EQ(e.last_support_index(), Index{2});
}

TEST(TruncateTest, Examples) {
  EXPECT_EQ(truncate(MeasureSource::geometric(R(1, 2)), 2),
            FiniteMeasure({R(1, 2), R(1, 4), R(1, 4)}));
  EXPECT_EQ(truncate(MeasureSource::explicit_values({R(1, 3), R(1, 3), R(1, 3)}), 1),
            FiniteMeasure({R(1, 3), R(2, 3)}));
  EXPECT_EQ(truncate(MeasureSource::explicit_values({R(1)}), 5),
            FiniteMeasure({R(1), R(0), R(0), R(0), R(0), R(0)}));
  EXPECT_EQ(truncate(MeasureSource::geometric(R(1, 2)), 0), FiniteMeasure({R(1)}));
}

TEST(TruncateTest, AlwaysNormalized) {
  MeasureSource g = MeasureSource::geometric(R(3, 5));
  for (Index n = 0; n < 30; ++n) {
    FiniteMeasure t = truncate(g, n);
    ASSERT_EQ(t.size(), n + 1);
    R total;
    for (const R& v : t.values()) total += v;
    ASSERT_EQ(total, R(1));
  }
}

TEST(EpsilonTest, Examples) {
  MeasureSource g = MeasureSource::geometric(R(1, 2));
  EXPECT_EQ(epsilon_n(g, g, 3), R(1, 4));
  EXPECT_EQ(epsilon_n(g, g, 0), R(2));
  MeasureSource a = MeasureSource::explicit_values({R(1, 2), R(1, 2)});
  MeasureSource b = MeasureSource::explicit_values({R(0), R(1, 4), R(3, 4)});
  EXPECT_EQ(epsilon_n(a, b, 2), R(0));
  EXPECT_EQ(epsilon_n(a, b, 5), R(0));
  EXPECT_EQ(epsilon_n(a, b, 1), R(3, 2));
}

TEST(EpsilonTest, MatchesMaterializedDistances) {
  // ||diag(mu) - diag(mu_N)||_1 + ||nu - nu_N||_1 on prefixes long enough
  // that the remaining tail is accounted for analytically.
  MeasureSource mu = MeasureSource::geometric(R(1, 2));
  MeasureSource nu = MeasureSource::geometric(R(2, 3));
  const Index horizon = 40;
  for (Index n = 0; n <= 12; ++n) {
    FiniteMeasure mu_n = truncate(mu, n);
    FiniteMeasure nu_n = truncate(nu, n);
    R distance;
    for (Index i = 0; i <= horizon; ++i) {
      distance += (mu.value_at(i) - mu_n[i]).abs();
      distance += (nu.value_at(i) - nu_n[i]).abs();
    }
    // Both sources are positive beyond n, so every omitted term is a plain
    // tail value.
    distance += (R(1) - mu.head_sum(horizon)) + (R(1) - nu.head_sum(horizon));
    ASSERT_EQ(distance, epsilon_n(mu, nu, n)) << n;
    ASSERT_LE(epsilon_n(mu, nu, n + 1), epsilon_n(mu, nu, n));
  }
}

TEST(DominanceTest, Examples) {
  Poset p = chain(2);
  FiniteMeasure half({R(1, 2), R(1, 2)});
  EXPECT_TRUE(check_dominance(half, FiniteMeasure({R(1, 4), R(3, 4)}), p,
                              p.ground()));
  EXPECT_FALSE(check_dominance(FiniteMeasure({R(0), R(1)}),
                               FiniteMeasure({R(1), R(0)}), p, p.ground()));
  EXPECT_TRUE(check_dominance(half, half, p, p.ground()));
  EXPECT_THROW(check_dominance(FiniteMeasure({R(0), R(0), R(1)}), half, p,
                               IndexSet{0, 1}),
               SupportError);
}

TEST(DominanceTest, MethodsAgreeOnSmallPosets) {
  // Exhaustive over denominators <= 6 up to four points; on five points every
  // mu is paired with a random sample of nu.
  testing::Rng rng(13);
  for (Index size = 1; size <= 5; ++size) {
    std::vector<std::vector<R>> measures =
        testing::small_denominator_measures(size, 6);
    std::uniform_int_distribution<std::size_t> pick(0, measures.size() - 1);
    for (const Poset& p : testing::unlabeled_posets(size)) {
      for (const auto& mu_values : measures) {
        FiniteMeasure mu(mu_values);
        std::size_t trials = size < 5 ? measures.size() : 8;
        for (std::size_t j = 0; j < trials; ++j) {
          FiniteMeasure nu(measures[size < 5 ? j : pick(rng)]);
          ASSERT_EQ(check_dominance(mu, nu, p, p.ground(),
                                    DominanceMethod::kEnumeration),
                    check_dominance(mu, nu, p, p.ground(),
                                    DominanceMethod::kMinCut));
        }
      }
    }
  }
}

TEST(L1DistanceTest, PadsWithZeros) {
  EXPECT_EQ(l1_distance(FiniteMeasure({R(1)}), FiniteMeasure({R(1, 2), R(1, 2)})),
            R(1));
}

TEST(CouplingTest, DiagonalInit) {
  Coupling c = diagonal_init(FiniteMeasure({R(1, 2), R(1, 4), R(1, 4)}));
  EXPECT_EQ(c.entries().size(), 3u);
  EXPECT_EQ(c.at(1, 1), R(1, 4));
  EXPECT_EQ(c.total_mass(), R(1));
  EXPECT_EQ(c.row_sum(0), R(1, 2));
  EXPECT_EQ(c.column_sum(2), R(1, 4));
  EXPECT_TRUE(c.caches_consistent());
  Coupling d = diagonal_init(FiniteMeasure({R(1)}));
  EXPECT_EQ(d.at(0, 0), R(1));
}

TEST(CouplingTest, AddSetAndDistance) {
  Coupling c(3);
  c.add(0, 2, R(1, 3));
  c.add(0, 2, R(-1, 3));
  EXPECT_TRUE(c.entries().empty());
  c.set(1, 2, R(1, 2));
  EXPECT_EQ(c.row_sum(1), R(1, 2));
  EXPECT_EQ(c.column_sum(2), R(1, 2));
  EXPECT_THROW(c.add(3, 0, R(1)), IndexError);
  Coupling d(5);
  d.add(4, 4, R(1, 4));
  EXPECT_EQ(l1_distance(c, d), R(3, 4));
  c.extend_bound(6);
  c.add(5, 5, R(1));
  EXPECT_TRUE(c.caches_consistent());
}

}  // namespace
}  // namespace strassen
