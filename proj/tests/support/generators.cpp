#include "support/generators.hpp"

#include <algorithm>
#include <numeric>

namespace strassen::testing {

Poset random_poset(Index size, Rng& rng, double edge_probability) {
  std::vector<Index> label(size);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<IndexPair> pairs;
  for (Index i = 0; i < size; ++i) {
    for (Index j = i + 1; j < size; ++j) {
      if (coin(rng)) pairs.push_back({label[i], label[j]});
    }
  }
  return Poset::from_pairs(pairs, size);
}

Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi,
                         std::int64_t max_den) {
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  std::uniform_int_distribution<std::int64_t> num(lo, hi);
  return Rational(num(rng), den(rng));
}

std::vector<Rational> random_distribution(Index size, std::int64_t units,
                                          Rng& rng) {
  std::vector<std::int64_t> counts(size, 0);
  std::uniform_int_distribution<Index> slot(0, size - 1);
  for (std::int64_t u = 0; u < units; ++u) ++counts[slot(rng)];
  std::vector<Rational> out;
  for (std::int64_t c : counts) out.emplace_back(c, units);
  return out;
}

Coupling push_up(const FiniteMeasure& mu, const Poset& p, Rng& rng) {
  Coupling plan(p.size());
  std::uniform_int_distribution<std::int64_t> part(0, 4);
  for (Index n = 0; n < mu.size(); ++n) {
    if (mu[n].is_zero()) continue;
    std::vector<Index> above;
    for (Index m = 0; m < p.size(); ++m) {
      if (p.less(n, m)) above.push_back(m);
    }
    Rational left = mu[n];
    std::uniform_int_distribution<Index> pick(0, above.empty() ? 0 : above.size() - 1);
    for (int moves = 0; moves < 3 && !above.empty(); ++moves) {
      Rational share = left * Rational(part(rng), 4);
      plan.add(n, above[pick(rng)], share);
      left -= share;
    }
    plan.add(n, n, left);
  }
  return plan;
}

DominatedInstance random_dominated_instance(Index max_size, Rng& rng) {
  std::uniform_int_distribution<Index> size_dist(2, max_size);
  std::uniform_int_distribution<std::int64_t> units_dist(1, 24);
  Index size = size_dist(rng);
  Poset p = random_poset(size, rng, 0.5);
  FiniteMeasure mu(random_distribution(size, units_dist(rng), rng));
  Coupling plan = push_up(mu, p, rng);
  std::vector<Rational> nu(size);
  for (Index m = 0; m < size; ++m) nu[m] = plan.column_sum(m);
  return DominatedInstance{std::move(p), std::move(mu),
                           FiniteMeasure(std::move(nu))};
}

std::vector<Rational> random_weights(Index size, Rng& rng) {
  std::vector<Rational> out;
  for (Index i = 0; i < size; ++i) {
    std::uniform_int_distribution<std::int64_t> den(1, 6);
    std::int64_t d = den(rng);
    std::uniform_int_distribution<std::int64_t> num(-2 * d, 2 * d);
    out.emplace_back(num(rng), d);
  }
  return out;
}

}  // namespace strassen::testing
