#include "strassen/measure.hpp"

#include <algorithm>
#include <string>

#include "strassen/errors.hpp"
#include "strassen/upset_optimizer.hpp"

namespace strassen {
namespace {

const Rational kZero{};

void validate_probability(const std::vector<Rational>& values) {
  Rational total;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].sign() < 0) {
      throw NegativeMassError("negative mass " + values[i].str() +
                              " at index " + std::to_string(i));
    }
    total += values[i];
  }
  if (total != Rational(1)) {
    throw NormalizationError("masses sum to " + total.str() + ", not 1");
  }
}

void require_support_in(const FiniteMeasure& measure, const IndexSet& l,
                        const char* name) {
  for (Index i : measure.support()) {
    if (!std::binary_search(l.begin(), l.end(), i)) {
      throw SupportError(std::string(name) + " has mass at " +
                         std::to_string(i) + " outside L");
    }
  }
}

}  // namespace

FiniteMeasure::FiniteMeasure(std::vector<Rational> values)
    : values_(std::move(values)) {
  validate_probability(values_);
}

const Rational& FiniteMeasure::operator[](Index n) const {
  return n < values_.size() ? values_[n] : kZero;
}

IndexSet FiniteMeasure::support() const {
  IndexSet out;
  for (Index i = 0; i < values_.size(); ++i) {
    if (!values_[i].is_zero()) out.push_back(i);
  }
  return out;
}

MeasureSource::MeasureSource(Kind kind, Rational ratio,
                             std::vector<Rational> values)
    : kind_(kind), ratio_(std::move(ratio)), values_(std::move(values)) {
  prefix_sums_.reserve(values_.size());
  Rational running;
  for (const Rational& v : values_) {
    running += v;
    prefix_sums_.push_back(running);
  }
}

MeasureSource MeasureSource::explicit_values(std::vector<Rational> values) {
  validate_probability(values);
  return MeasureSource(Kind::kExplicit, Rational{}, std::move(values));
}

MeasureSource MeasureSource::geometric(Rational ratio) {
  if (ratio.sign() <= 0 || ratio >= Rational(1)) {
    throw DomainError("geometric ratio must lie in (0,1), got " + ratio.str());
  }
  return MeasureSource(Kind::kGeometric, std::move(ratio), {});
}

Rational MeasureSource::value_at(Index n) const {
  if (kind_ == Kind::kExplicit) {
    return n < values_.size() ? values_[n] : Rational{};
  }
  return (Rational(1) - ratio_) * pow(ratio_, static_cast<unsigned>(n));
}

Rational MeasureSource::head_sum(Index n) const {
  if (kind_ == Kind::kExplicit) {
    if (values_.empty()) return Rational{};
    return prefix_sums_[std::min(n, values_.size() - 1)];
  }
  return Rational(1) - pow(ratio_, static_cast<unsigned>(n + 1));
}

std::optional<Index> MeasureSource::last_support_index() const {
  if (kind_ == Kind::kGeometric) return std::nullopt;
  for (Index i = values_.size(); i-- > 0;) {
    if (!values_[i].is_zero()) return i;
  }
  return std::nullopt;
}

FiniteMeasure truncate(const MeasureSource& src, Index n_cut) {
  std::vector<Rational> values;
  values.reserve(n_cut + 1);
  for (Index i = 0; i < n_cut; ++i) values.push_back(src.value_at(i));
  Rational head = n_cut == 0 ? Rational{} : src.head_sum(n_cut - 1);
  Rational rest = Rational(1) - head;
  if (rest.sign() < 0) {
    throw NegativeMassError("head sum " + head.str() + " exceeds one");
  }
  values.push_back(rest);
  return FiniteMeasure(std::move(values));
}

Rational epsilon_n(const MeasureSource& mu, const MeasureSource& nu,
                   Index n_cut) {
  return Rational(2) * (Rational(2) - mu.head_sum(n_cut) - nu.head_sum(n_cut));
}

Rational l1_distance(const FiniteMeasure& a, const FiniteMeasure& b) {
  Rational total;
  for (Index i = 0; i < std::max(a.size(), b.size()); ++i) {
    total += (a[i] - b[i]).abs();
  }
  return total;
}

bool check_dominance(const FiniteMeasure& mu, const FiniteMeasure& nu,
                     const Poset& p, const IndexSet& l_in,
                     DominanceMethod method) {
  const IndexSet l = make_index_set(l_in);
  require_support_in(mu, l, "mu");
  require_support_in(nu, l, "nu");
  if (method == DominanceMethod::kEnumeration) {
    for (const IndexSet& r : enumerate_upsets(p, l)) {
      Rational mu_mass;
      Rational nu_mass;
      for (Index i : r) {
        mu_mass += mu[i];
        nu_mass += nu[i];
      }
      if (mu_mass > nu_mass) return false;
    }
    return true;
  }
  std::vector<Rational> slack(p.size());
  for (Index i : l) slack[i] = nu[i] - mu[i];
  return min_weight_upset(WeightVector(std::move(slack)), p, l).weight.sign() >=
         0;
}

}  // namespace strassen
