#pragma once

#include <cstdint>
#include <optional>

#include "strassen/poset.hpp"

namespace strassen {

// Snake-like walk over N x N by square shells. Shell s visits the 2s+1
// points with max(n, m) = s; odd shells run (s,0), (s,1), ..., (s,s),
// (s-1,s), ..., (0,s), even shells run the other way round. So the walk
// starts (0,0), (1,0), (1,1), (0,1), (0,2), (1,2), (2,2), (2,1), (2,0),
// (3,0), ... and its first (s+1)^2 points are exactly {0..s}^2.
//
// Positions are 0-based.
IndexPair boustrophedon_point(std::uint64_t position);
std::uint64_t boustrophedon_position(IndexPair pair);

// The walk restricted to {0..size-1}^2, keeping only strictly comparable
// pairs n < m. Because the square is a prefix of the walk, this is a prefix
// of the filtered walk of any order extending the poset's prefix.
class Sweep {
 public:
  explicit Sweep(const Poset& p) : poset_(&p) {}

  // Next comparable pair, or nullopt once the square is exhausted.
  std::optional<IndexPair> next();
  void restart() { position_ = 0; }

 private:
  const Poset* poset_;
  std::uint64_t position_ = 0;
};

// k-th (1-based) pair of the filtered sweep; nullopt when the poset has
// fewer than k comparable pairs.
std::optional<IndexPair> sweep_sequence(std::size_t k, const Poset& p);

// 1-based rank of a strictly comparable pair in the filtered sweep.
// OrderError if n < m does not hold.
std::size_t sweep_rank(IndexPair pair, const Poset& p);

// Number of strictly comparable pairs, i.e. the length of one full sweep.
std::size_t sweep_length(const Poset& p);

}  // namespace strassen
