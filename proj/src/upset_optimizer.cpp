#include "strassen/upset_optimizer.hpp"

#include <algorithm>
#include <string>

#include "strassen/errors.hpp"
#include "strassen/max_flow.hpp"

namespace strassen {
namespace {

const Rational kZero{};

void require_strict(const Poset& p, const IndexSet& l, Index n, Index m) {
  if (!std::binary_search(l.begin(), l.end(), n) ||
      !std::binary_search(l.begin(), l.end(), m)) {
    throw IndexError("n and m must belong to L");
  }
  if (!p.less(n, m)) {
    throw OrderError("need n < m, got (" + std::to_string(n) + "," +
                     std::to_string(m) + ")");
  }
}

}  // namespace

const Rational& WeightVector::operator[](Index i) const {
  return i < weights_.size() ? weights_[i] : kZero;
}

Rational WeightVector::sum_over(const IndexSet& r) const {
  Rational total;
  for (Index i : r) total += (*this)[i];
  return total;
}

ClosureSolution min_weight_upset(const WeightVector& w, const Poset& p,
                                 const IndexSet& l_in,
                                 const IndexSet& forced_in,
                                 const IndexSet& forced_out) {
  const IndexSet l = make_index_set(l_in);
  const std::size_t count = l.size();
  for (Index x : l) {
    if (x >= p.size()) throw IndexError("L exceeds the ground set");
  }
  auto position = [&](Index x) {
    auto it = std::lower_bound(l.begin(), l.end(), x);
    if (it == l.end() || *it != x) {
      throw IndexError("pinned element " + std::to_string(x) + " not in L");
    }
    return static_cast<std::size_t>(it - l.begin());
  };

  Rational infinity(1);
  Rational negative_total;
  for (Index x : l) {
    infinity += w[x].abs();
    if (w[x].sign() < 0) negative_total += w[x];
  }

  const std::size_t source = count;
  const std::size_t sink = count + 1;
  FlowNetwork net(count + 2);
  for (std::size_t i = 0; i < count; ++i) {
    const Rational& wi = w[l[i]];
    if (wi.sign() > 0) net.add_edge(i, sink, wi);
    if (wi.sign() < 0) net.add_edge(source, i, -wi);
  }
  // Covering pairs within L generate the same closure as the full relation.
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j || !p.leq_unchecked(l[i], l[j])) continue;
      bool covers = true;
      for (std::size_t k = 0; k < count && covers; ++k) {
        if (k != i && k != j && p.leq_unchecked(l[i], l[k]) &&
            p.leq_unchecked(l[k], l[j])) {
          covers = false;
        }
      }
      if (covers) net.add_edge(i, j, infinity);
    }
  }
  for (Index x : forced_in) net.add_edge(source, position(x), infinity);
  for (Index y : forced_out) net.add_edge(position(y), sink, infinity);

  Rational cut = net.max_flow(source, sink);
  if (cut >= infinity) {
    throw OrderError("pinning constraints admit no upward-closed set");
  }
  std::vector<bool> side = net.source_side(source);
  ClosureSolution out;
  for (std::size_t i = 0; i < count; ++i) {
    if (side[i]) out.members.push_back(l[i]);
  }
  out.weight = w.sum_over(out.members);
  if (out.weight != cut + negative_total) {
    throw InvariantError("closure weight disagrees with cut value");
  }
  return out;
}

Rational min_upset_weight_bruteforce(const WeightVector& w, const Poset& p,
                                     const IndexSet& l_in, Index n, Index m) {
  const IndexSet l = make_index_set(l_in);
  require_strict(p, l, n, m);
  std::vector<IndexSet> family = enumerate_constrained_upsets(p, l, n, m);
  Rational best = w.sum_over(family.front());
  for (const IndexSet& r : family) best = min(best, w.sum_over(r));
  return best;
}

Rational min_upset_weight_mincut(const WeightVector& w, const Poset& p,
                                 const IndexSet& l_in, Index n, Index m) {
  const IndexSet l = make_index_set(l_in);
  require_strict(p, l, n, m);
  return min_weight_upset(w, p, l, {m}, {n}).weight;
}

}  // namespace strassen
