#pragma once

#include <cstddef>
#include <vector>

#include "strassen/rational.hpp"

namespace strassen {

// Directed flow network with exact rational capacities, solved by
// shortest augmenting paths (Edmonds-Karp). The number of augmentations is
// bounded by O(V E) regardless of the capacity values, so termination does
// not depend on the arithmetic.
class FlowNetwork {
 public:
  using EdgeId = std::size_t;

  explicit FlowNetwork(std::size_t num_nodes);

  std::size_t num_nodes() const { return adjacency_.size(); }

  // Capacity must be >= 0. Returns the id used by flow().
  EdgeId add_edge(std::size_t from, std::size_t to, Rational capacity);

  // Computes a maximum flow from scratch and returns its value.
  Rational max_flow(std::size_t source, std::size_t sink);

  const Rational& flow(EdgeId edge) const { return arcs_[2 * edge].flow; }
  const Rational& capacity(EdgeId edge) const {
    return arcs_[2 * edge].capacity;
  }

  // Nodes reachable from `source` in the residual graph of the last
  // max_flow() call; this is the source side of a minimum cut.
  std::vector<bool> source_side(std::size_t source) const;

 private:
  struct Arc {
    std::size_t to;
    Rational capacity;
    Rational flow;
  };

  Rational residual(std::size_t arc) const {
    return arcs_[arc].capacity - arcs_[arc].flow;
  }
  bool has_residual(std::size_t arc) const {
    return arcs_[arc].flow < arcs_[arc].capacity;
  }

  // Arcs come in pairs: 2e is the forward arc of edge e, 2e+1 its reverse.
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

}  // namespace strassen
