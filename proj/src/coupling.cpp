#include "strassen/coupling.hpp"

#include <string>

#include "strassen/errors.hpp"

namespace strassen {
namespace {
const Rational kZero{};
}  // namespace

Coupling::Coupling(Index bound)
    : bound_(bound), row_sums_(bound), column_sums_(bound) {}

Coupling Coupling::diagonal(const FiniteMeasure& mu) {
  Coupling out(mu.size());
  for (Index n = 0; n < mu.size(); ++n) {
    if (!mu[n].is_zero()) out.add(n, n, mu[n]);
  }
  return out;
}

const Rational& Coupling::at(Index n, Index m) const {
  auto it = entries_.find({n, m});
  return it == entries_.end() ? kZero : it->second;
}

const Rational& Coupling::row_sum(Index n) const {
  return n < bound_ ? row_sums_[n] : kZero;
}

const Rational& Coupling::column_sum(Index m) const {
  return m < bound_ ? column_sums_[m] : kZero;
}

Rational Coupling::total_mass() const {
  Rational total;
  for (const auto& [pair, value] : entries_) total += value;
  return total;
}

void Coupling::add(Index n, Index m, const Rational& delta) {
  if (n >= bound_ || m >= bound_) {
    throw IndexError("entry (" + std::to_string(n) + "," + std::to_string(m) +
                     ") outside coupling of bound " + std::to_string(bound_));
  }
  if (delta.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({n, m}, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second.is_zero()) entries_.erase(it);
  }
  row_sums_[n] += delta;
  column_sums_[m] += delta;
}

void Coupling::set(Index n, Index m, const Rational& value) {
  add(n, m, value - at(n, m));
}

void Coupling::extend_bound(Index bound) {
  if (bound <= bound_) return;
  bound_ = bound;
  row_sums_.resize(bound);
  column_sums_.resize(bound);
}

bool Coupling::caches_consistent() const {
  std::vector<Rational> rows(bound_);
  std::vector<Rational> cols(bound_);
  for (const auto& [pair, value] : entries_) {
    rows[pair.n] += value;
    cols[pair.m] += value;
  }
  return rows == row_sums_ && cols == column_sums_;
}

Coupling diagonal_init(const FiniteMeasure& mu) { return Coupling::diagonal(mu); }

Rational l1_distance(const Coupling& a, const Coupling& b) {
  Rational total;
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() || ib != b.entries().end()) {
    if (ib == b.entries().end() ||
        (ia != a.entries().end() && ia->first < ib->first)) {
      total += ia->second.abs();
      ++ia;
    } else if (ia == a.entries().end() || ib->first < ia->first) {
      total += ib->second.abs();
      ++ib;
    } else {
      total += (ia->second - ib->second).abs();
      ++ia;
      ++ib;
    }
  }
  return total;
}

}  // namespace strassen
