#include "strassen/kernel.hpp"

#include <algorithm>
#include <string>

#include "strassen/errors.hpp"
#include "strassen/sweep.hpp"
#include "strassen/upset_optimizer.hpp"

namespace strassen {
namespace {

// Validated view of the ground set L with O(1) membership.
struct Ground {
  IndexSet members;
  std::vector<bool> contains;

  Ground(const Poset& p, const IndexSet& l) : members(make_index_set(l)) {
    contains.assign(p.size(), false);
    for (Index x : members) {
      if (x >= p.size()) {
        throw IndexError("L contains " + std::to_string(x) +
                         ", outside the poset");
      }
      contains[x] = true;
    }
  }

  bool has(Index x) const { return x < contains.size() && contains[x]; }
};

void require_supports(const FiniteMeasure& nu, const Coupling& lam,
                      const Ground& ground) {
  for (Index i : nu.support()) {
    if (!ground.has(i)) {
      throw SupportError("nu has mass at " + std::to_string(i) +
                         " outside L");
    }
  }
  for (const auto& [pair, value] : lam.entries()) {
    if (!ground.has(pair.n) || !ground.has(pair.m)) {
      throw SupportError("coupling has mass at (" + std::to_string(pair.n) +
                         "," + std::to_string(pair.m) + ") outside L x L");
    }
  }
}

AlphaEvaluation evaluate(const FiniteMeasure& nu, const Coupling& lam, Index n,
                         Index m, const Poset& p, const Ground& ground,
                         UpsetMethod method) {
  if (!ground.has(n) || !ground.has(m) || !p.less(n, m)) return {};

  AlphaEvaluation out;
  out.value = lam.column_sum(n) - nu[n];
  out.attained = AlphaTerm::kFirstMarginalSlack;
  Rational second = nu[m] - lam.column_sum(m);
  if (second < out.value) {
    out.value = std::move(second);
    out.attained = AlphaTerm::kSecondMarginalSlack;
  }
  if (out.value.sign() <= 0) {
    out.value = Rational{};
    return out;
  }

  std::vector<Rational> slack(p.size());
  for (Index x : ground.members) slack[x] = nu[x] - lam.column_sum(x);
  WeightVector weights(std::move(slack));
  Rational upset = method == UpsetMethod::kMinCut
                       ? min_upset_weight_mincut(weights, p, ground.members, n, m)
                       : min_upset_weight_bruteforce(weights, p,
                                                     ground.members, n, m);
  if (upset < out.value) {
    out.value = std::move(upset);
    out.attained = AlphaTerm::kUpsetInfimum;
  }
  if (out.value.sign() <= 0) out.value = Rational{};
  return out;
}

// Applies one map in place and returns its trace.
StepTrace step_in_place(const FiniteMeasure& nu, Coupling& lam, Index n,
                        Index m, const Poset& p, const Ground& ground,
                        UpsetMethod method) {
  StepTrace trace;
  trace.pair = {n, m};
  trace.column_n_before = lam.column_sum(n);
  trace.column_m_before = lam.column_sum(m);
  AlphaEvaluation eval = evaluate(nu, lam, n, m, p, ground, method);
  trace.alpha = eval.value;
  trace.attained = eval.attained;
  if (eval.value.sign() > 0) {
    if (lam.at(n, n) < eval.value) {
      throw NegativeEntryError(
          "step (" + std::to_string(n) + "," + std::to_string(m) +
          ") would make the diagonal entry negative: " + lam.at(n, n).str() +
          " - " + eval.value.str());
    }
    lam.add(n, n, -eval.value);
    lam.add(n, m, eval.value);
  }
  trace.column_n_after = lam.column_sum(n);
  trace.column_m_after = lam.column_sum(m);
  return trace;
}

}  // namespace

std::string_view to_string(AlphaTerm term) {
  switch (term) {
    case AlphaTerm::kNotApplicable:
      return "not-applicable";
    case AlphaTerm::kFirstMarginalSlack:
      return "first-marginal-slack";
    case AlphaTerm::kSecondMarginalSlack:
      return "second-marginal-slack";
    case AlphaTerm::kUpsetInfimum:
      return "upset-infimum";
  }
  return "unknown";
}

AlphaEvaluation evaluate_alpha(const FiniteMeasure& nu, const Coupling& lam,
                               Index n, Index m, const Poset& p,
                               const IndexSet& l, UpsetMethod method) {
  Ground ground(p, l);
  require_supports(nu, lam, ground);
  return evaluate(nu, lam, n, m, p, ground, method);
}

Rational alpha(const FiniteMeasure& nu, const Coupling& lam, Index n, Index m,
               const Poset& p, const IndexSet& l, UpsetMethod method) {
  return evaluate_alpha(nu, lam, n, m, p, l, method).value;
}

std::pair<Coupling, StepTrace> phi_step(const FiniteMeasure& nu,
                                        const Coupling& lam, Index n, Index m,
                                        const Poset& p, const IndexSet& l,
                                        UpsetMethod method) {
  Ground ground(p, l);
  require_supports(nu, lam, ground);
  Coupling next = lam;
  next.extend_bound(p.size());
  StepTrace trace = step_in_place(nu, next, n, m, p, ground, method);
  return {std::move(next), std::move(trace)};
}

std::vector<IndexPair> active_set(const FiniteMeasure& nu, const Coupling& lam,
                                  const Poset& p, const IndexSet& l,
                                  UpsetMethod method) {
  Ground ground(p, l);
  require_supports(nu, lam, ground);
  std::vector<IndexPair> out;
  for (Index n : ground.members) {
    for (Index m : ground.members) {
      if (evaluate(nu, lam, n, m, p, ground, method).value.sign() > 0) {
        out.push_back({n, m});
      }
    }
  }
  return out;
}

RunResult run(const FiniteMeasure& nu, const Coupling& lam0, const Poset& p,
              const IndexSet& l, std::size_t steps,
              const RunOptions& options) {
  Ground ground(p, l);
  require_supports(nu, lam0, ground);
  RunResult result{lam0, {}};
  result.coupling.extend_bound(p.size());
  Sweep sweep(p);
  for (std::size_t k = 0; k < steps; ++k) {
    std::optional<IndexPair> pair = sweep.next();
    if (!pair && options.repeat_sweep) {
      sweep.restart();
      pair = sweep.next();
    }
    if (!pair) break;
    result.traces.push_back(step_in_place(nu, result.coupling, pair->n,
                                          pair->m, p, ground,
                                          options.method));
    if (options.check_caches && !result.coupling.caches_consistent()) {
      throw InvariantError("cached marginals drifted after step " +
                           std::to_string(k + 1));
    }
  }
  return result;
}

}  // namespace strassen
