#pragma once

#include <optional>
#include <span>
#include <vector>

#include "strassen/poset.hpp"
#include "strassen/rational.hpp"

namespace strassen {

// Probability vector on {0, ..., size-1}: nonnegative entries summing to
// exactly one. Reads past the end return zero.
class FiniteMeasure {
 public:
  // Throws NegativeMassError or NormalizationError.
  explicit FiniteMeasure(std::vector<Rational> values);

  Index size() const { return values_.size(); }
  const Rational& operator[](Index n) const;
  std::span<const Rational> values() const { return values_; }
  IndexSet support() const;

  friend bool operator==(const FiniteMeasure&, const FiniteMeasure&) = default;

 private:
  std::vector<Rational> values_;
};

// A probability sequence on all of the naturals with exact point values and
// exact beginning-section sums.
class MeasureSource {
 public:
  enum class Kind { kExplicit, kGeometric };

  // Finitely supported; validated like FiniteMeasure.
  static MeasureSource explicit_values(std::vector<Rational> values);
  // value_at(n) = (1 - q) q^n for 0 < q < 1; DomainError otherwise.
  static MeasureSource geometric(Rational ratio);

  Kind kind() const { return kind_; }
  const Rational& ratio() const { return ratio_; }
  // Explicit values (empty for geometric sources).
  std::span<const Rational> values() const { return values_; }

  Rational value_at(Index n) const;
  // sum_{i <= n} value_at(i).
  Rational head_sum(Index n) const;
  // Largest index carrying mass, if the support is finite.
  std::optional<Index> last_support_index() const;

 private:
  MeasureSource(Kind kind, Rational ratio, std::vector<Rational> values);

  Kind kind_;
  Rational ratio_;
  std::vector<Rational> values_;
  std::vector<Rational> prefix_sums_;
};

// Truncation at n_cut: agrees with the source below n_cut and lumps the
// remaining mass 1 - head_sum(n_cut - 1) at n_cut. Length n_cut + 1.
// NegativeMassError if the source's head sums exceed one.
FiniteMeasure truncate(const MeasureSource& src, Index n_cut);

// 2 (2 - head_sum_mu(n_cut) - head_sum_nu(n_cut)), the l1 cost of truncating
// both inputs at n_cut.
Rational epsilon_n(const MeasureSource& mu, const MeasureSource& nu,
                   Index n_cut);

// sum_n |a_n - b_n| with zero padding.
Rational l1_distance(const FiniteMeasure& a, const FiniteMeasure& b);

enum class DominanceMethod { kEnumeration, kMinCut };

// True iff mu(R) <= nu(R) for every R subset of L upward closed within L.
// kEnumeration walks all upsets; kMinCut minimizes sum_{l in R}(nu_l - mu_l)
// over all upsets with one closure cut and tests the minimum for >= 0.
// SupportError if either measure has mass outside L.
bool check_dominance(const FiniteMeasure& mu, const FiniteMeasure& nu,
                     const Poset& p, const IndexSet& l,
                     DominanceMethod method = DominanceMethod::kMinCut);

}  // namespace strassen
