#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace strassen {

using Index = std::size_t;

// Sorted, duplicate-free list of indices.
using IndexSet = std::vector<Index>;

// Sorts and deduplicates.
IndexSet make_index_set(std::vector<Index> indices);

struct IndexPair {
  Index n = 0;
  Index m = 0;

  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

// A partial order on the prefix {0, ..., size-1} of the naturals, stored as
// its reflexive-transitive closure in a dense table.
class Poset {
 public:
  Poset() = default;

  // Reflexive-transitive closure of `pairs`. Throws IndexError for indices
  // >= size and CycleError when the closure is not antisymmetric.
  static Poset from_pairs(std::span<const IndexPair> pairs, Index size);

  // Restriction of `leq` to the prefix. The predicate must already be a
  // partial order there: OrderError if it is not reflexive or transitive,
  // CycleError if it is not antisymmetric.
  static Poset from_predicate(const std::function<bool(Index, Index)>& leq,
                              Index size);

  Index size() const { return size_; }

  // Out-of-range queries throw IndexError.
  bool leq(Index n, Index m) const;
  bool less(Index n, Index m) const { return n != m && leq(n, m); }

  // Unchecked variant for hot loops; both indices must be < size().
  bool leq_unchecked(Index n, Index m) const {
    return table_[n * size_ + m] != 0;
  }

  IndexSet ground() const;
  std::vector<IndexPair> strict_pairs() const;

  // Sub-poset on {0, ..., size-1}; size must not exceed size().
  Poset prefix(Index size) const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  Poset(Index size, std::vector<std::uint8_t> table)
      : size_(size), table_(std::move(table)) {}

  Index size_ = 0;
  std::vector<std::uint8_t> table_;
};

// A partial order on all of the naturals, given by a finite presentation.
// Only prefixes of it are ever materialized and validated.
class Order {
 public:
  enum class Kind { kExplicitPairs, kTotal, kDivisibility };

  // n <= m iff the pair is in the reflexive-transitive closure of `pairs`.
  // Indices never mentioned are comparable only to themselves.
  static Order explicit_pairs(std::vector<IndexPair> pairs);
  // The usual order 0 < 1 < 2 < ...
  static Order total();
  // n <= m iff (n + 1) divides (m + 1).
  static Order divisibility();

  Kind kind() const { return kind_; }
  const std::vector<IndexPair>& pairs() const { return pairs_; }

  bool leq(Index n, Index m) const;

  // Validated restriction to {0, ..., size-1}.
  Poset prefix(Index size) const;

 private:
  Order(Kind kind, std::vector<IndexPair> pairs, Poset closure)
      : kind_(kind), pairs_(std::move(pairs)), closure_(std::move(closure)) {}

  Kind kind_ = Kind::kTotal;
  std::vector<IndexPair> pairs_;
  Poset closure_;
};

// Smallest subset of L containing S that is upward closed within L:
// { l in L : exists k in S with k <= l }. Requires S subset of L subset of
// the ground set; IndexError otherwise.
IndexSet upward_closure(const Poset& p, const IndexSet& s, const IndexSet& l);

// { l in L : exists k in S with l <= k }.
IndexSet downward_closure(const Poset& p, const IndexSet& s,
                          const IndexSet& l);

// True iff every k in R, l in L with k <= l has l in R.
bool is_upward_closed(const Poset& p, const IndexSet& r, const IndexSet& l);

// All sets R subset of L, upward closed within L, with n not in R and m in R.
// Requires n < m strictly (OrderError otherwise) and n, m in L.
//
// Recursive descent in index order: putting an element in R forces its
// up-closure in, leaving it out forces its down-closure out, so every leaf
// is a distinct valid set. Output size grows like the number of antichains,
// which is exponential; meant for |L| up to about 20.
std::vector<IndexSet> enumerate_constrained_upsets(const Poset& p,
                                                   const IndexSet& l, Index n,
                                                   Index m);

// Every upward-closed subset of L, including the empty set and L itself.
std::vector<IndexSet> enumerate_upsets(const Poset& p, const IndexSet& l);

}  // namespace strassen
