#include "strassen/poset.hpp"

#include <algorithm>
#include <string>

#include "strassen/errors.hpp"

namespace strassen {
namespace {

std::string pair_str(Index n, Index m) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

void check_subset(const IndexSet& s, const IndexSet& l, Index size,
                  const char* what) {
  for (Index x : l) {
    if (x >= size) {
      throw IndexError("index " + std::to_string(x) + " outside ground set of size " +
                       std::to_string(size));
    }
  }
  for (Index x : s) {
    if (!std::binary_search(l.begin(), l.end(), x)) {
      throw IndexError(std::string(what) + " contains " + std::to_string(x) +
                       " which is not in L");
    }
  }
}

enum class Mark : std::uint8_t { kUnknown, kIn, kOut };

// Shared recursion for upset enumeration. `marks` is indexed by position in L.
void descend(const Poset& p, const IndexSet& l, std::vector<Mark>& marks,
             std::size_t next, std::vector<IndexSet>& out) {
  while (next < l.size() && marks[next] != Mark::kUnknown) ++next;
  if (next == l.size()) {
    IndexSet members;
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (marks[i] == Mark::kIn) members.push_back(l[i]);
    }
    out.push_back(std::move(members));
    return;
  }
  std::vector<std::size_t> touched;
  for (std::size_t i = next; i < l.size(); ++i) {
    if (marks[i] == Mark::kUnknown && p.leq_unchecked(l[next], l[i])) {
      marks[i] = Mark::kIn;
      touched.push_back(i);
    }
  }
  descend(p, l, marks, next + 1, out);
  for (std::size_t i : touched) marks[i] = Mark::kUnknown;
  touched.clear();

  for (std::size_t i = next; i < l.size(); ++i) {
    if (marks[i] == Mark::kUnknown && p.leq_unchecked(l[i], l[next])) {
      marks[i] = Mark::kOut;
      touched.push_back(i);
    }
  }
  descend(p, l, marks, next + 1, out);
  for (std::size_t i : touched) marks[i] = Mark::kUnknown;
}

std::vector<IndexSet> enumerate_with_marks(const Poset& p, const IndexSet& l,
                                           std::vector<Mark> marks) {
  std::vector<IndexSet> out;
  descend(p, l, marks, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

IndexSet make_index_set(std::vector<Index> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return indices;
}

Poset Poset::from_pairs(std::span<const IndexPair> pairs, Index size) {
  std::vector<std::uint8_t> table(size * size, 0);
  for (Index i = 0; i < size; ++i) table[i * size + i] = 1;
  for (const IndexPair& pr : pairs) {
    if (pr.n >= size || pr.m >= size) {
      throw IndexError("pair " + pair_str(pr.n, pr.m) +
                       " has an index outside {0.." + std::to_string(size) +
                       "-1}");
    }
    table[pr.n * size + pr.m] = 1;
  }
  // Warshall closure.
  for (Index k = 0; k < size; ++k) {
    for (Index i = 0; i < size; ++i) {
      if (!table[i * size + k]) continue;
      for (Index j = 0; j < size; ++j) {
        if (table[k * size + j]) table[i * size + j] = 1;
      }
    }
  }
  for (Index i = 0; i < size; ++i) {
    for (Index j = i + 1; j < size; ++j) {
      if (table[i * size + j] && table[j * size + i]) {
        throw CycleError("closure is not antisymmetric: " + pair_str(i, j) +
                         " and " + pair_str(j, i) + " both hold");
      }
    }
  }
  return Poset(size, std::move(table));
}

Poset Poset::from_predicate(const std::function<bool(Index, Index)>& leq,
                            Index size) {
  std::vector<std::uint8_t> table(size * size, 0);
  for (Index i = 0; i < size; ++i) {
    for (Index j = 0; j < size; ++j) table[i * size + j] = leq(i, j) ? 1 : 0;
  }
  for (Index i = 0; i < size; ++i) {
    if (!table[i * size + i]) {
      throw OrderError("predicate is not reflexive at " + std::to_string(i));
    }
    for (Index j = i + 1; j < size; ++j) {
      if (table[i * size + j] && table[j * size + i]) {
        throw CycleError("predicate is not antisymmetric at " +
                         pair_str(i, j));
      }
    }
  }
  for (Index i = 0; i < size; ++i) {
    for (Index k = 0; k < size; ++k) {
      if (!table[i * size + k]) continue;
      for (Index j = 0; j < size; ++j) {
        if (table[k * size + j] && !table[i * size + j]) {
          throw OrderError("predicate is not transitive: " + pair_str(i, k) +
                           ", " + pair_str(k, j) + " but not " +
                           pair_str(i, j));
        }
      }
    }
  }
  return Poset(size, std::move(table));
}

bool Poset::leq(Index n, Index m) const {
  if (n >= size_ || m >= size_) {
    throw IndexError("query " + pair_str(n, m) + " outside poset of size " +
                     std::to_string(size_));
  }
  return leq_unchecked(n, m);
}

IndexSet Poset::ground() const {
  IndexSet out(size_);
  for (Index i = 0; i < size_; ++i) out[i] = i;
  return out;
}

std::vector<IndexPair> Poset::strict_pairs() const {
  std::vector<IndexPair> out;
  for (Index i = 0; i < size_; ++i) {
    for (Index j = 0; j < size_; ++j) {
      if (i != j && leq_unchecked(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

Poset Poset::prefix(Index size) const {
  if (size > size_) {
    throw IndexError("prefix of size " + std::to_string(size) +
                     " exceeds poset of size " + std::to_string(size_));
  }
  std::vector<std::uint8_t> table(size * size);
  for (Index i = 0; i < size; ++i) {
    for (Index j = 0; j < size; ++j) {
      table[i * size + j] = table_[i * size_ + j];
    }
  }
  return Poset(size, std::move(table));
}

Order Order::explicit_pairs(std::vector<IndexPair> pairs) {
  Index size = 0;
  for (const IndexPair& pr : pairs) size = std::max({size, pr.n + 1, pr.m + 1});
  Poset closure = Poset::from_pairs(pairs, size);
  return Order(Kind::kExplicitPairs, std::move(pairs), std::move(closure));
}

Order Order::total() { return Order(Kind::kTotal, {}, Poset{}); }

Order Order::divisibility() { return Order(Kind::kDivisibility, {}, Poset{}); }

bool Order::leq(Index n, Index m) const {
  switch (kind_) {
    case Kind::kTotal:
      return n <= m;
    case Kind::kDivisibility:
      return (m + 1) % (n + 1) == 0;
    case Kind::kExplicitPairs:
      if (n == m) return true;
      if (n >= closure_.size() || m >= closure_.size()) return false;
      return closure_.leq_unchecked(n, m);
  }
  return false;
}

Poset Order::prefix(Index size) const {
  return Poset::from_predicate([this](Index n, Index m) { return leq(n, m); },
                               size);
}

IndexSet upward_closure(const Poset& p, const IndexSet& s, const IndexSet& l) {
  IndexSet ls = make_index_set(l);
  IndexSet ss = make_index_set(s);
  check_subset(ss, ls, p.size(), "S");
  IndexSet out;
  for (Index x : ls) {
    for (Index k : ss) {
      if (p.leq_unchecked(k, x)) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

IndexSet downward_closure(const Poset& p, const IndexSet& s,
                          const IndexSet& l) {
  IndexSet ls = make_index_set(l);
  IndexSet ss = make_index_set(s);
  check_subset(ss, ls, p.size(), "S");
  IndexSet out;
  for (Index x : ls) {
    for (Index k : ss) {
      if (p.leq_unchecked(x, k)) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

bool is_upward_closed(const Poset& p, const IndexSet& r, const IndexSet& l) {
  for (Index k : r) {
    for (Index x : l) {
      if (p.leq(k, x) && !std::binary_search(r.begin(), r.end(), x)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<IndexSet> enumerate_constrained_upsets(const Poset& p,
                                                   const IndexSet& l, Index n,
                                                   Index m) {
  IndexSet ls = make_index_set(l);
  check_subset({n, m}, ls, p.size(), "{n, m}");
  if (!p.less(n, m)) {
    throw OrderError("constrained upsets need n < m, got " + pair_str(n, m));
  }
  std::vector<Mark> marks(ls.size(), Mark::kUnknown);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (p.leq_unchecked(m, ls[i])) marks[i] = Mark::kIn;
    if (p.leq_unchecked(ls[i], n)) marks[i] = Mark::kOut;
  }
  return enumerate_with_marks(p, ls, std::move(marks));
}

std::vector<IndexSet> enumerate_upsets(const Poset& p, const IndexSet& l) {
  IndexSet ls = make_index_set(l);
  check_subset({}, ls, p.size(), "S");
  return enumerate_with_marks(p, ls,
                              std::vector<Mark>(ls.size(), Mark::kUnknown));
}

}  // namespace strassen
