#include "strassen/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "strassen/errors.hpp"

namespace strassen {
namespace {

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

IndexPair boustrophedon_point(std::uint64_t position) {
  const std::uint64_t s = isqrt(position);
  const std::uint64_t t = position - s * s;
  if (s % 2 == 1) {
    return t <= s ? IndexPair{s, t} : IndexPair{2 * s - t, s};
  }
  return t <= s ? IndexPair{t, s} : IndexPair{s, 2 * s - t};
}

std::uint64_t boustrophedon_position(IndexPair pair) {
  const std::uint64_t s = std::max(pair.n, pair.m);
  std::uint64_t t = 0;
  if (s % 2 == 1) {
    t = pair.n == s ? pair.m : 2 * s - pair.n;
  } else {
    t = pair.m == s ? pair.n : 2 * s - pair.m;
  }
  return s * s + t;
}

std::optional<IndexPair> Sweep::next() {
  const std::uint64_t size = poset_->size();
  const std::uint64_t end = size * size;
  while (position_ < end) {
    IndexPair pair = boustrophedon_point(position_++);
    if (pair.n != pair.m && poset_->leq_unchecked(pair.n, pair.m)) return pair;
  }
  return std::nullopt;
}

std::optional<IndexPair> sweep_sequence(std::size_t k, const Poset& p) {
  if (k == 0) throw DomainError("sweep positions start at 1");
  Sweep sweep(p);
  std::optional<IndexPair> pair;
  for (std::size_t i = 0; i < k; ++i) {
    pair = sweep.next();
    if (!pair) return std::nullopt;
  }
  return pair;
}

std::size_t sweep_rank(IndexPair pair, const Poset& p) {
  if (!p.less(pair.n, pair.m)) {
    throw OrderError("(" + std::to_string(pair.n) + "," +
                     std::to_string(pair.m) + ") is not strictly comparable");
  }
  const std::uint64_t target = boustrophedon_position(pair);
  std::size_t rank = 0;
  for (std::uint64_t pos = 0; pos <= target; ++pos) {
    IndexPair q = boustrophedon_point(pos);
    if (q.n != q.m && p.leq_unchecked(q.n, q.m)) ++rank;
  }
  return rank;
}

std::size_t sweep_length(const Poset& p) { return p.strict_pairs().size(); }

}  // namespace strassen
