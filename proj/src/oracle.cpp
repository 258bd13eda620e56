#include "strassen/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "strassen/errors.hpp"
#include "strassen/max_flow.hpp"

namespace strassen {
namespace {

bool in_set(const IndexSet& sorted, Index x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

void require_support(const FiniteMeasure& measure, const IndexSet& l,
                     const char* name) {
  for (Index i : measure.support()) {
    if (!in_set(l, i)) {
      throw SupportError(std::string(name) + " has mass at " +
                         std::to_string(i) + " outside L");
    }
  }
}

}  // namespace

VerificationReport verify_solution(const Coupling& lam, const FiniteMeasure& mu,
                                   const FiniteMeasure& nu, const Poset& p,
                                   const IndexSet& l) {
  const IndexSet ground = make_index_set(l);
  VerificationReport report;

  for (const auto& [pair, value] : lam.entries()) {
    report.total_mass += value;
    if (value < report.most_negative_entry) {
      report.most_negative_entry = value;
      report.negative_witness = pair;
    }
    bool allowed = in_set(ground, pair.n) && in_set(ground, pair.m) &&
                   pair.n < p.size() && pair.m < p.size() &&
                   p.leq_unchecked(pair.n, pair.m);
    if (!allowed) {
      report.support_violation_mass += value.abs();
      if (!report.support_witness) report.support_witness = pair;
    }
  }
  report.mass_ok = !report.negative_witness && report.total_mass == Rational(1);
  report.support_ok = !report.support_witness;

  const Index bound =
      std::max({lam.bound(), mu.size(), nu.size(), p.size()});
  for (Index i = 0; i < bound; ++i) {
    Rational row_gap = (lam.row_sum(i) - mu[i]).abs();
    if (row_gap > report.worst_row_violation) {
      report.worst_row_violation = row_gap;
      report.row_witness = i;
    }
    Rational col_gap = (lam.column_sum(i) - nu[i]).abs();
    report.column_deficit_l1 += col_gap;
    if (col_gap > report.worst_col_violation) {
      report.worst_col_violation = std::move(col_gap);
      report.col_witness = i;
    }
  }
  report.row_marginals_ok = !report.row_witness;
  report.col_marginals_ok = !report.col_witness;
  return report;
}

std::optional<Coupling> maxflow_splitting(const FiniteMeasure& mu,
                                          const FiniteMeasure& nu,
                                          const Poset& p, const IndexSet& l) {
  const IndexSet ground = make_index_set(l);
  for (Index x : ground) {
    if (x >= p.size()) {
      throw IndexError("L contains " + std::to_string(x) +
                       ", outside the poset");
    }
  }
  require_support(mu, ground, "mu");
  require_support(nu, ground, "nu");

  // Node 0 is the source, 1 the sink, then one left and one right copy of
  // each element of L.
  const std::size_t size = ground.size();
  const std::size_t source = 0;
  const std::size_t sink = 1;
  auto left = [](std::size_t i) { return 2 + i; };
  auto right = [size](std::size_t j) { return 2 + size + j; };

  FlowNetwork network(2 + 2 * size);
  for (std::size_t i = 0; i < size; ++i) {
    if (!mu[ground[i]].is_zero()) {
      network.add_edge(source, left(i), mu[ground[i]]);
    }
    if (!nu[ground[i]].is_zero()) {
      network.add_edge(right(i), sink, nu[ground[i]]);
    }
  }
  struct Middle {
    IndexPair pair;
    FlowNetwork::EdgeId edge;
  };
  std::vector<Middle> middle;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (p.leq_unchecked(ground[i], ground[j])) {
        middle.push_back({{ground[i], ground[j]},
                          network.add_edge(left(i), right(j), Rational(1))});
      }
    }
  }

  if (network.max_flow(source, sink) != Rational(1)) return std::nullopt;
  Coupling out(p.size());
  for (const Middle& arc : middle) {
    const Rational& flow = network.flow(arc.edge);
    if (!flow.is_zero()) out.add(arc.pair.n, arc.pair.m, flow);
  }
  return out;
}

}  // namespace strassen
