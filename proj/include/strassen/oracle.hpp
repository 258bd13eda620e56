#pragma once

#include <optional>

#include "strassen/coupling.hpp"
#include "strassen/measure.hpp"
#include "strassen/poset.hpp"
#include "strassen/rational.hpp"

namespace strassen {

// Result of checking a candidate coupling against the four conditions of a
// Strassen coupling on a finite ground set.
struct VerificationReport {
  // Entries nonnegative and summing to one.
  bool mass_ok = false;
  // Every nonzero entry (n, m) has n, m in L and n <= m.
  bool support_ok = false;
  // Row sums equal mu.
  bool row_marginals_ok = false;
  // Column sums equal nu.
  bool col_marginals_ok = false;

  Rational most_negative_entry;  // min(0, smallest entry)
  Rational total_mass;
  Rational worst_row_violation;  // max_n |lambda_{n,*} - mu_n|
  Rational worst_col_violation;  // max_m |lambda_{*,m} - nu_m|
  Rational support_violation_mass;
  // sum_m |lambda_{*,m} - nu_m|; useful for approximants.
  Rational column_deficit_l1;

  std::optional<IndexPair> negative_witness;
  std::optional<IndexPair> support_witness;
  std::optional<Index> row_witness;
  std::optional<Index> col_witness;

  bool ok() const {
    return mass_ok && support_ok && row_marginals_ok && col_marginals_ok;
  }
};

// Never throws on bad candidates; everything is reported.
VerificationReport verify_solution(const Coupling& lam, const FiniteMeasure& mu,
                                   const FiniteMeasure& nu, const Poset& p,
                                   const IndexSet& l);

// Coupling of mu and nu supported on the order, read off a maximum flow on
// source -> n (mu_n), n -> m for n <= m (1), m -> sink (nu_m). Empty when the
// maximum flow is below one. SupportError if mu or nu has mass outside L.
std::optional<Coupling> maxflow_splitting(const FiniteMeasure& mu,
                                          const FiniteMeasure& nu,
                                          const Poset& p, const IndexSet& l);

}  // namespace strassen
