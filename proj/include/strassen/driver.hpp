#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "strassen/coupling.hpp"
#include "strassen/kernel.hpp"
#include "strassen/measure.hpp"
#include "strassen/poset.hpp"
#include "strassen/rational.hpp"

namespace strassen {

// Truncation chosen for the k-th approximant.
struct Schedule {
  std::size_t k = 0;
  Index truncation = 0;       // N_k
  Rational epsilon;           // epsilon_{N_k} <= 1 / (k 3^k)
  Rational divergence_bound;  // 3^k epsilon_{N_k} <= 1 / k
};

// Smallest N with epsilon_n(mu, nu, N) <= 1 / (k 3^k), found from sums of
// beginning sections. DomainError for k == 0.
Schedule schedule_n(const MeasureSource& mu, const MeasureSource& nu,
                    std::size_t k);

// 3^k * eps0: how far k steps along a common sweep can pull two runs apart
// when their data start eps0 apart in l1.
Rational divergence_bound(std::size_t k, const Rational& eps0);

// ceil(max{1/eps, max(n, m)^2}). From this step count on, entry (n, m) of
// every approximant is within eps of the limit. DomainError if eps <= 0 or
// the result does not fit in 64 bits.
std::uint64_t pointwise_k0(Index n, Index m, const Rational& eps);

// Run on data truncated at `truncation`, over the order's prefix
// {0..truncation}.
struct TruncatedRun {
  FiniteMeasure mu;
  FiniteMeasure nu;
  Poset poset;
  RunResult result;
};

TruncatedRun truncated_run(const MeasureSource& mu, const MeasureSource& nu,
                           const Order& order, Index truncation,
                           std::size_t steps, const RunOptions& options = {});

struct Approximant {
  Schedule schedule;
  TruncatedRun run;

  const Coupling& coupling() const { return run.result.coupling; }
};

// k steps on the data truncated at N_k. Uses finitely many exact operations.
Approximant delta_k(const MeasureSource& mu, const MeasureSource& nu,
                    const Order& order, std::size_t k,
                    const RunOptions& options = {});

struct PerturbationGap {
  Rational alpha_gap;  // |alpha - alpha~|
  Rational budget;     // ||lam - lam~||_1 + ||nu - nu~||_1
};

PerturbationGap perturbation_gap(const FiniteMeasure& nu,
                                 const FiniteMeasure& nu_tilde,
                                 const Coupling& lam,
                                 const Coupling& lam_tilde, Index n, Index m,
                                 const Poset& p, const IndexSet& l);

struct EntryCertificate {
  IndexPair pair;
  Rational epsilon;
  std::uint64_t k0 = 0;
};

struct ErrorReport {
  Schedule schedule;
  // Bound on the l1 distance between the k-th approximant and the k-th
  // iterate of the untruncated run: 1/k.
  Rational l1_bound;
  std::vector<EntryCertificate> certificates;
};

ErrorReport error_report(const Schedule& schedule,
                         std::span<const IndexPair> pairs,
                         const Rational& eps);

}  // namespace strassen
