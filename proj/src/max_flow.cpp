#include "strassen/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "strassen/errors.hpp"

namespace strassen {
namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}  // namespace

FlowNetwork::FlowNetwork(std::size_t num_nodes) : adjacency_(num_nodes) {}

FlowNetwork::EdgeId FlowNetwork::add_edge(std::size_t from, std::size_t to,
                                          Rational capacity) {
  if (from >= num_nodes() || to >= num_nodes()) {
    throw IndexError("edge endpoint outside network");
  }
  if (capacity.sign() < 0) throw DomainError("negative capacity");
  EdgeId id = arcs_.size() / 2;
  adjacency_[from].push_back(arcs_.size());
  arcs_.push_back({to, std::move(capacity), Rational{}});
  adjacency_[to].push_back(arcs_.size());
  arcs_.push_back({from, Rational{}, Rational{}});
  return id;
}

Rational FlowNetwork::max_flow(std::size_t source, std::size_t sink) {
  if (source >= num_nodes() || sink >= num_nodes() || source == sink) {
    throw IndexError("bad source/sink");
  }
  for (Arc& arc : arcs_) arc.flow = Rational{};

  Rational total;
  std::vector<std::size_t> via(num_nodes());
  std::queue<std::size_t> frontier;
  while (true) {
    std::fill(via.begin(), via.end(), kNone);
    via[source] = kNone - 1;
    frontier = {};
    frontier.push(source);
    while (!frontier.empty() && via[sink] == kNone) {
      std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t a : adjacency_[u]) {
        std::size_t v = arcs_[a].to;
        if (via[v] == kNone && has_residual(a)) {
          via[v] = a;
          frontier.push(v);
        }
      }
    }
    if (via[sink] == kNone) break;

    Rational bottleneck = residual(via[sink]);
    for (std::size_t v = arcs_[via[sink] ^ 1].to; v != source;
         v = arcs_[via[v] ^ 1].to) {
      bottleneck = min(bottleneck, residual(via[v]));
    }
    for (std::size_t v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
      std::size_t a = via[v];
      arcs_[a].flow += bottleneck;
      arcs_[a ^ 1].flow -= bottleneck;
    }
    total += bottleneck;
  }
  return total;
}

std::vector<bool> FlowNetwork::source_side(std::size_t source) const {
  std::vector<bool> seen(num_nodes(), false);
  std::queue<std::size_t> frontier;
  seen[source] = true;
  frontier.push(source);
  while (!frontier.empty()) {
    std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t a : adjacency_[u]) {
      std::size_t v = arcs_[a].to;
      if (!seen[v] && has_residual(a)) {
        seen[v] = true;
        frontier.push(v);
      }
    }
  }
  return seen;
}

}  // namespace strassen
