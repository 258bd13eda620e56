#pragma once

#include <map>
#include <vector>

#include "strassen/measure.hpp"
#include "strassen/poset.hpp"
#include "strassen/rational.hpp"

namespace strassen {

// Sparse matrix of exact rationals on {0, ..., bound-1}^2 with cached row
// and column sums. Zero entries are never stored, so entries() is exactly
// the support.
class Coupling {
 public:
  explicit Coupling(Index bound = 0);

  // Diagonal matrix built from mu; both marginals equal mu.
  static Coupling diagonal(const FiniteMeasure& mu);

  Index bound() const { return bound_; }

  const Rational& at(Index n, Index m) const;
  const Rational& row_sum(Index n) const;
  const Rational& column_sum(Index m) const;
  Rational total_mass() const;

  const std::map<IndexPair, Rational>& entries() const { return entries_; }

  // Adds `delta` to entry (n, m) and updates both caches. IndexError when
  // outside the bound.
  void add(Index n, Index m, const Rational& delta);
  void set(Index n, Index m, const Rational& value);

  // Grows the bound; never shrinks it.
  void extend_bound(Index bound);

  // Recomputes every row and column sum and compares with the caches.
  bool caches_consistent() const;

  friend bool operator==(const Coupling& a, const Coupling& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Index bound_;
  std::map<IndexPair, Rational> entries_;
  std::vector<Rational> row_sums_;
  std::vector<Rational> column_sums_;
};

Coupling diagonal_init(const FiniteMeasure& mu);

// sum over all (n, m) of |a_{n,m} - b_{n,m}|; the bounds may differ.
Rational l1_distance(const Coupling& a, const Coupling& b);

}  // namespace strassen
