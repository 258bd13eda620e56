#include "strassen/oracle.hpp"

#include <gtest/gtest.h>

#include "strassen/errors.hpp"
#include "strassen/kernel.hpp"
#include "strassen/sweep.hpp"
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

TEST(MaxflowSplittingTest, Examples) {
  Poset p = chain(2);
  FiniteMeasure mu({R(1, 2), R(1, 2)});
  FiniteMeasure nu({R(1, 4), R(3, 4)});
  std::optional<Coupling> split = maxflow_splitting(mu, nu, p, p.ground());
  ASSERT_TRUE(split.has_value());
  EXPECT_TRUE(verify_solution(*split, mu, nu, p, p.ground()).ok());

  EXPECT_FALSE(maxflow_splitting(FiniteMeasure({R(0), R(1)}),
                                 FiniteMeasure({R(1), R(0)}), p, p.ground())
                   .has_value());

  Poset antichain = Poset::from_pairs({}, 3);
  FiniteMeasure third({R(1, 3), R(1, 3), R(1, 3)});
  std::optional<Coupling> diag =
      maxflow_splitting(third, third, antichain, antichain.ground());
  ASSERT_TRUE(diag.has_value());
  EXPECT_EQ(*diag, diagonal_init(third));

  EXPECT_THROW(maxflow_splitting(FiniteMeasure({R(0), R(0), R(1)}), mu, chain(3),
                                 IndexSet{0, 1}),
               SupportError);
}

TEST(VerifySolutionTest, Examples) {
  Poset p = chain(2);
  FiniteMeasure mu({R(1, 2), R(1, 2)});
  FiniteMeasure nu({R(1, 4), R(3, 4)});
  Coupling solved = run(nu, diagonal_init(mu), p, p.ground(), 1).coupling;
  VerificationReport good = verify_solution(solved, mu, nu, p, p.ground());
  EXPECT_TRUE(good.ok());
  EXPECT_EQ(good.column_deficit_l1, R(0));

  VerificationReport diag =
      verify_solution(diagonal_init(mu), mu, nu, p, p.ground());
  EXPECT_TRUE(diag.mass_ok);
  EXPECT_TRUE(diag.support_ok);
  EXPECT_TRUE(diag.row_marginals_ok);
  EXPECT_FALSE(diag.col_marginals_ok);
  EXPECT_EQ(diag.col_witness, Index{0});
  EXPECT_EQ(diag.worst_col_violation, R(1, 4));
  EXPECT_EQ(diag.column_deficit_l1, R(1, 2));

  Coupling backwards(2);
  backwards.add(1, 0, R(1));
  VerificationReport bad =
      verify_solution(backwards, FiniteMeasure({R(0), R(1)}),
                      FiniteMeasure({R(1), R(0)}), p, p.ground());
  EXPECT_FALSE(bad.support_ok);
  EXPECT_EQ(bad.support_witness, (IndexPair{1, 0}));
  EXPECT_TRUE(bad.row_marginals_ok);
  EXPECT_TRUE(bad.col_marginals_ok);

  Coupling negative(2);
  negative.add(0, 0, R(3, 2));
  negative.add(1, 1, R(-1, 2));
  VerificationReport neg = verify_solution(
      negative, FiniteMeasure({R(1), R(0)}), FiniteMeasure({R(1), R(0)}), p,
      p.ground());
  EXPECT_FALSE(neg.mass_ok);
  EXPECT_EQ(neg.negative_witness, (IndexPair{1, 1}));
  EXPECT_EQ(neg.most_negative_entry, R(-1, 2));
}

TEST(OracleEquivalenceTest, FeasibleIffDominatedAndBothSolversVerify) {
  for (Index size = 1; size <= 4; ++size) {
    std::vector<std::vector<R>> measures =
        testing::small_denominator_measures(size, 3);
    for (const Poset& p : testing::unlabeled_posets(size)) {
      const IndexSet ground = p.ground();
      for (const auto& mu_values : measures) {
        FiniteMeasure mu(mu_values);
        for (const auto& nu_values : measures) {
          FiniteMeasure nu(nu_values);
          bool dominated = check_dominance(mu, nu, p, ground);
          std::optional<Coupling> split = maxflow_splitting(mu, nu, p, ground);
          ASSERT_EQ(split.has_value(), dominated);
          if (!dominated) continue;
          ASSERT_TRUE(verify_solution(*split, mu, nu, p, ground).ok());
          Coupling solved =
              run(nu, diagonal_init(mu), p, ground, sweep_length(p)).coupling;
          ASSERT_TRUE(verify_solution(solved, mu, nu, p, ground).ok());
        }
      }
    }
  }
}

}  // namespace
}  // namespace strassen
