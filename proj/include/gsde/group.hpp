#pragma once

// Finite groups given by explicit Cayley tables, with subgroups and cosets.
// Keeping the full table makes every product O(1) and lets the verification
// layer enumerate exhaustively; intended scale is order <= a few hundred.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gsde/errors.hpp"
#include "gsde/rng.hpp"

namespace gsde {

using Element = int;

struct GroupBuildOptions {
  // Associativity is cubic; check every triple up to this order, sample above.
  int exhaustive_bound = 512;
  bool force_exhaustive = false;
  std::uint64_t sample_seed = 0x5eedu;
};

class FiniteGroup {
 public:
  int order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element x, Element y) const {
    return cayley_[static_cast<std::size_t>(x) * order_ + y];
  }
  Element inv(Element x) const { return inverse_[x]; }
  const std::string& name() const { return name_; }

  bool valid_element(Element x) const { return x >= 0 && x < order_; }

  // Smallest n >= 1 with x^n = e.
  int element_order(Element x) const {
    int n = 1;
    Element p = x;
    while (p != identity_) {
      p = mul(p, x);
      ++n;
    }
    return n;
  }

  static std::shared_ptr<const FiniteGroup> build(
      const std::vector<std::vector<Element>>& cayley, Element identity,
      std::string name = "", const GroupBuildOptions& opts = {});

 private:
  FiniteGroup() = default;

  int order_ = 0;
  Element identity_ = 0;
  std::vector<Element> cayley_;   // row-major order x order
  std::vector<Element> inverse_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline std::shared_ptr<const FiniteGroup> FiniteGroup::build(
    const std::vector<std::vector<Element>>& cayley, Element identity,
    std::string name, const GroupBuildOptions& opts) {
  const int n = static_cast<int>(cayley.size());
  if (n == 0) throw NotLatinSquare("empty table");
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(cayley[r].size()) != n)
      throw NotLatinSquare("row " + std::to_string(r) + " has " +
                           std::to_string(cayley[r].size()) +
                           " entries, expected " + std::to_string(n));
    for (int c = 0; c < n; ++c) {
      const Element v = cayley[r][c];
      if (v < 0 || v >= n)
        throw NotLatinSquare("entry out of range at (" + std::to_string(r) +
                             "," + std::to_string(c) + "): " +
                             std::to_string(v));
    }
  }
  // Latin square: each row and each column is a permutation of 0..n-1.
  for (int r = 0; r < n; ++r) {
    std::vector<bool> seen(n, false);
    for (int c = 0; c < n; ++c) {
      if (seen[cayley[r][c]])
        throw NotLatinSquare("row " + std::to_string(r) +
                             " repeats value " + std::to_string(cayley[r][c]) +
                             " at column " + std::to_string(c));
      seen[cayley[r][c]] = true;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<bool> seen(n, false);
    for (int r = 0; r < n; ++r) {
      if (seen[cayley[r][c]])
        throw NotLatinSquare("column " + std::to_string(c) +
                             " repeats value " + std::to_string(cayley[r][c]) +
                             " at row " + std::to_string(r));
      seen[cayley[r][c]] = true;
    }
  }
  if (identity < 0 || identity >= n)
    throw NoIdentity("identity index " + std::to_string(identity) +
                     " out of range");
  for (int x = 0; x < n; ++x) {
    if (cayley[identity][x] != x)
      throw NoIdentity("e*" + std::to_string(x) + " = " +
                       std::to_string(cayley[identity][x]));
    if (cayley[x][identity] != x)
      throw NoIdentity(std::to_string(x) + "*e = " +
                       std::to_string(cayley[x][identity]));
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->identity_ = identity;
  g->name_ = std::move(name);
  g->cayley_.resize(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      g->cayley_[static_cast<std::size_t>(r) * n + c] = cayley[r][c];

  auto check_triple = [&](int a, int b, int c) {
    const Element lhs = g->mul(g->mul(a, b), c);
    const Element rhs = g->mul(a, g->mul(b, c));
    if (lhs != rhs)
      throw NotAssociative("(" + std::to_string(a) + "*" + std::to_string(b) +
                           ")*" + std::to_string(c) + " = " +
                           std::to_string(lhs) + " but " + std::to_string(a) +
                           "*(" + std::to_string(b) + "*" + std::to_string(c) +
                           ") = " + std::to_string(rhs));
  };
  if (n <= opts.exhaustive_bound || opts.force_exhaustive) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    SplitMix64 rng(opts.sample_seed);
    const std::int64_t trials = 10LL * n * n;
    for (std::int64_t t = 0; t < trials; ++t)
      check_triple(static_cast<int>(rng.next() % n),
                   static_cast<int>(rng.next() % n),
                   static_cast<int>(rng.next() % n));
  }

  g->inverse_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (g->mul(x, y) == identity && g->mul(y, x) == identity) {
        g->inverse_[x] = y;
        break;
      }
    }
    if (g->inverse_[x] < 0)
      throw NoInverse("element " + std::to_string(x) +
                      " has no two-sided inverse");
  }
  return g;
}

// A subgroup is stored as the sorted member list plus a membership mask.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<Element> members)
      : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
    mask_.assign(parent_->order(), false);
    for (Element m : members_) {
      if (!parent_->valid_element(m))
        throw NotSubgroup("member index out of range: " + std::to_string(m));
      mask_[m] = true;
    }
    if (!mask_[parent_->identity()])
      throw NotSubgroup("identity missing");
    for (Element a : members_)
      for (Element b : members_)
        if (!mask_[parent_->mul(a, b)])
          throw NotSubgroup("not closed: " + std::to_string(a) + "*" +
                            std::to_string(b) + " = " +
                            std::to_string(parent_->mul(a, b)));
    for (Element a : members_)
      if (!mask_[parent_->inv(a)])
        throw NotSubgroup("inverse of " + std::to_string(a) + " missing");
  }

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Element>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(Element x) const { return mask_[x]; }

  bool operator==(const Subgroup& o) const {
    return parent_ == o.parent_ && members_ == o.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

// Smallest subgroup containing the generators (breadth-first closure).
inline Subgroup subgroup_closure(const GroupPtr& g,
                                 const std::vector<Element>& generators) {
  std::vector<bool> in(g->order(), false);
  std::vector<Element> queue;
  auto push = [&](Element x) {
    if (!in[x]) {
      in[x] = true;
      queue.push_back(x);
    }
  };
  push(g->identity());
  for (Element x : generators) {
    if (!g->valid_element(x))
      throw NotSubgroup("generator out of range: " + std::to_string(x));
    push(x);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element a = queue[i];
    push(g->inv(a));
    for (std::size_t j = 0; j <= i; ++j) {
      push(g->mul(a, queue[j]));
      push(g->mul(queue[j], a));
    }
  }
  std::sort(queue.begin(), queue.end());
  return Subgroup(g, queue);
}

// Partition of G into right cosets Kg, ordered by minimal representative;
// each coset is sorted.
inline std::vector<std::vector<Element>> right_cosets(const GroupPtr& g,
                                                      const Subgroup& k) {
  if (k.parent() != g) throw GroupMismatch("subgroup of a different group");
  std::vector<bool> covered(g->order(), false);
  std::vector<std::vector<Element>> cosets;
  for (Element rep = 0; rep < g->order(); ++rep) {
    if (covered[rep]) continue;
    std::vector<Element> coset;
    coset.reserve(k.size());
    for (Element m : k.members()) {
      const Element x = g->mul(m, rep);
      covered[x] = true;
      coset.push_back(x);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

}  // namespace gsde
