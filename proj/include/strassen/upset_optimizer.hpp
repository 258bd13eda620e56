#pragma once

#include <vector>

#include "strassen/poset.hpp"
#include "strassen/rational.hpp"

namespace strassen {

// Weights indexed by element; indices past the end weigh zero.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> weights)
      : weights_(std::move(weights)) {}

  const Rational& operator[](Index i) const;
  Index size() const { return weights_.size(); }
  Rational sum_over(const IndexSet& r) const;

 private:
  std::vector<Rational> weights_;
};

struct ClosureSolution {
  Rational weight;
  IndexSet members;
};

// Minimum of sum_{l in R} w_l over sets R subset of L that are upward closed
// within L, contain `forced_in` and avoid `forced_out`.
//
// Solved as a minimum-weight closure with one s-t min cut: a node per element
// of L, infinite arcs along covering pairs of the order, s->l with capacity
// -w_l for negative weights, l->t with capacity w_l for positive ones, and
// infinite pinning arcs s->x for forced members and y->t for forbidden ones.
// "Infinite" is 1 + sum |w_l|, which no finite cut reaches. The returned set
// is the residual source side, i.e. the inclusion-minimal minimizer.
//
// Throws OrderError when the constraints admit no set (some forced member
// lies below a forbidden one).
ClosureSolution min_weight_upset(const WeightVector& w, const Poset& p,
                                 const IndexSet& l,
                                 const IndexSet& forced_in = {},
                                 const IndexSet& forced_out = {});

// Minimum over the constrained family (n excluded, m included) by explicit
// enumeration. Requires n < m; OrderError otherwise.
Rational min_upset_weight_bruteforce(const WeightVector& w, const Poset& p,
                                     const IndexSet& l, Index n, Index m);

// Same value through min_weight_upset.
Rational min_upset_weight_mincut(const WeightVector& w, const Poset& p,
                                 const IndexSet& l, Index n, Index m);

}  // namespace strassen
