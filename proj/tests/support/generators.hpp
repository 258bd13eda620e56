#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "strassen/coupling.hpp"
#include "strassen/measure.hpp"
#include "strassen/poset.hpp"
#include "strassen/rational.hpp"

namespace strassen::testing {

using Rng = std::mt19937_64;

// Closure of random edges i -> j (i < j in a random relabeling).
Poset random_poset(Index size, Rng& rng, double edge_probability = 0.4);

// Uniform numerator in [lo, hi] over a uniform denominator in [1, max_den].
Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi,
                         std::int64_t max_den);

// Random probability vector whose entries are multiples of 1/units.
std::vector<Rational> random_distribution(Index size, std::int64_t units,
                                          Rng& rng);

// Moves random fractions of each mu_n to random elements strictly above n. Returns
// the transport plan; its column sums dominate mu by construction.
Coupling push_up(const FiniteMeasure& mu, const Poset& p, Rng& rng);

struct DominatedInstance {
  Poset poset;
  FiniteMeasure mu;
  FiniteMeasure nu;
};

// Poset with 2..max_size elements, random mu, nu obtained by push_up.
DominatedInstance random_dominated_instance(Index max_size, Rng& rng);

// Weights k/d with |k| <= 2d, d <= 6.
std::vector<Rational> random_weights(Index size, Rng& rng);

}  // namespace strassen::testing
