#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "strassen/coupling.hpp"
#include "strassen/measure.hpp"
#include "strassen/poset.hpp"
#include "strassen/rational.hpp"

namespace strassen {

// Which term of the three-way minimum defining alpha was smallest.
enum class AlphaTerm {
  kNotApplicable,        // (n, m) not strictly comparable inside L
  kFirstMarginalSlack,   // lambda_{*,n} - nu_n
  kSecondMarginalSlack,  // nu_m - lambda_{*,m}
  kUpsetInfimum,         // min over constrained upsets of sum (nu - lambda_*)
};

std::string_view to_string(AlphaTerm term);

enum class UpsetMethod { kMinCut, kBruteForce };

struct AlphaEvaluation {
  Rational value;
  AlphaTerm attained = AlphaTerm::kNotApplicable;
};

// Step size for moving mass from (n, n) to (n, m):
//   min{ lambda_{*,n} - nu_n, nu_m - lambda_{*,m},
//        min_{R} sum_{l in R} (nu_l - lambda_{*,l}) }
// over R subset of L upward closed within L with n not in R, m in R, when
// n < m and that minimum is positive; zero otherwise. Pairs outside L x L
// get zero.
//
// Ties go to the first-listed term. When a marginal slack is already <= 0
// the upset term is not evaluated, and `attained` names that slack.
//
// nu and lam must be supported in L (resp. L x L); SupportError otherwise.
AlphaEvaluation evaluate_alpha(const FiniteMeasure& nu, const Coupling& lam,
                               Index n, Index m, const Poset& p,
                               const IndexSet& l,
                               UpsetMethod method = UpsetMethod::kMinCut);

Rational alpha(const FiniteMeasure& nu, const Coupling& lam, Index n, Index m,
               const Poset& p, const IndexSet& l,
               UpsetMethod method = UpsetMethod::kMinCut);

struct StepTrace {
  IndexPair pair;
  Rational alpha;
  AlphaTerm attained = AlphaTerm::kNotApplicable;
  Rational column_n_before;
  Rational column_m_before;
  Rational column_n_after;
  Rational column_m_after;
};

// Moves alpha from (n, n) to (n, m). Row sums are unchanged; column n loses
// alpha and column m gains it. NegativeEntryError if (n, n) would go below
// zero.
std::pair<Coupling, StepTrace> phi_step(
    const FiniteMeasure& nu, const Coupling& lam, Index n, Index m,
    const Poset& p, const IndexSet& l,
    UpsetMethod method = UpsetMethod::kMinCut);

// Every (n, m) in L x L with alpha > 0, sorted.
std::vector<IndexPair> active_set(const FiniteMeasure& nu, const Coupling& lam,
                                  const Poset& p, const IndexSet& l,
                                  UpsetMethod method = UpsetMethod::kMinCut);

struct RunOptions {
  UpsetMethod method = UpsetMethod::kMinCut;
  // Start the sweep over once it runs out instead of idling.
  bool repeat_sweep = false;
  // Recompute row and column sums after every step and compare them with
  // the incrementally updated caches; InvariantError on mismatch.
  bool check_caches = false;
};

struct RunResult {
  Coupling coupling;
  // One entry per pair actually visited; steps past the end of a
  // non-repeating sweep are identity maps and leave no trace.
  std::vector<StepTrace> traces;
};

// Applies `steps` maps along the filtered boustrophedon sweep of p.
RunResult run(const FiniteMeasure& nu, const Coupling& lam0, const Poset& p,
              const IndexSet& l, std::size_t steps,
              const RunOptions& options = {});

}  // namespace strassen
