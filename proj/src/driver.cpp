#include "strassen/driver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "strassen/errors.hpp"

namespace strassen {

Schedule schedule_n(const MeasureSource& mu, const MeasureSource& nu,
                    std::size_t k) {
  if (k == 0) throw DomainError("schedule needs k >= 1");
  const Rational three_k = pow(Rational(3), static_cast<unsigned>(k));
  const Rational target = (Rational(static_cast<std::int64_t>(k)) * three_k)
                              .reciprocal();
  // epsilon_n is nonincreasing and tends to 0 for every valid source, so a
  // doubling search followed by bisection finds the smallest admissible N.
  auto admissible = [&](Index n_cut) {
    return epsilon_n(mu, nu, n_cut) <= target;
  };
  Index lo = 0;
  Index hi = 0;
  if (!admissible(0)) {
    hi = 1;
    while (!admissible(hi)) {
      lo = hi;
      hi *= 2;
    }
    // admissible(hi) holds and admissible(lo) does not.
    while (hi - lo > 1) {
      Index mid = lo + (hi - lo) / 2;
      (admissible(mid) ? hi : lo) = mid;
    }
  }
  Rational eps = epsilon_n(mu, nu, hi);
  return Schedule{k, hi, eps, three_k * eps};
}

Rational divergence_bound(std::size_t k, const Rational& eps0) {
  if (eps0.sign() < 0) throw DomainError("negative perturbation size");
  return pow(Rational(3), static_cast<unsigned>(k)) * eps0;
}

std::uint64_t pointwise_k0(Index n, Index m, const Rational& eps) {
  if (eps.sign() <= 0) throw DomainError("eps must be positive");
  const auto top = static_cast<std::int64_t>(std::max(n, m));
  Rational bound = max(eps.reciprocal(), Rational(top) * Rational(top));
  try {
    return static_cast<std::uint64_t>(bound.ceil().to_int64());
  } catch (const std::overflow_error&) {
    throw DomainError("k0 does not fit in 64 bits for eps " + eps.str());
  }
}

TruncatedRun truncated_run(const MeasureSource& mu, const MeasureSource& nu,
                           const Order& order, Index truncation,
                           std::size_t steps, const RunOptions& options) {
  FiniteMeasure mu_cut = truncate(mu, truncation);
  FiniteMeasure nu_cut = truncate(nu, truncation);
  Poset poset = order.prefix(truncation + 1);
  RunResult result = run(nu_cut, diagonal_init(mu_cut), poset, poset.ground(),
                         steps, options);
  return TruncatedRun{std::move(mu_cut), std::move(nu_cut), std::move(poset),
                      std::move(result)};
}

Approximant delta_k(const MeasureSource& mu, const MeasureSource& nu,
                    const Order& order, std::size_t k,
                    const RunOptions& options) {
  Schedule schedule = schedule_n(mu, nu, k);
  TruncatedRun run =
      truncated_run(mu, nu, order, schedule.truncation, k, options);
  return Approximant{std::move(schedule), std::move(run)};
}

PerturbationGap perturbation_gap(const FiniteMeasure& nu,
                                 const FiniteMeasure& nu_tilde,
                                 const Coupling& lam,
                                 const Coupling& lam_tilde, Index n, Index m,
                                 const Poset& p, const IndexSet& l) {
  Rational a = alpha(nu, lam, n, m, p, l);
  Rational b = alpha(nu_tilde, lam_tilde, n, m, p, l);
  return PerturbationGap{(a - b).abs(),
                         l1_distance(lam, lam_tilde) + l1_distance(nu, nu_tilde)};
}

ErrorReport error_report(const Schedule& schedule,
                         std::span<const IndexPair> pairs,
                         const Rational& eps) {
  ErrorReport report;
  report.schedule = schedule;
  report.l1_bound =
      Rational(static_cast<std::int64_t>(std::max<std::size_t>(schedule.k, 1)))
          .reciprocal();
  for (const IndexPair& pair : pairs) {
    report.certificates.push_back(
        EntryCertificate{pair, eps, pointwise_k0(pair.n, pair.m, eps)});
  }
  return report;
}

}  // namespace strassen
