#pragma once

#include <cstdint>
#include <vector>

#include "strassen/poset.hpp"
#include "strassen/rational.hpp"

namespace strassen::testing {

// One representative of every isomorphism class of partial orders on
// `size` elements (1, 1, 2, 5, 16, 63, 318 for size 0..6).
std::vector<Poset> unlabeled_posets(Index size);

// Every probability vector of length `size` whose entries are fractions
// k/d with d <= max_den.
std::vector<std::vector<Rational>> small_denominator_measures(
    Index size, std::int64_t max_den);

}  // namespace strassen::testing
