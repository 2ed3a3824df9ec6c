#pragma once

// Automorphisms of a finite group, stored as permutations of element indices.

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "gsde/errors.hpp"
#include "gsde/group.hpp"

namespace gsde {

class Automorphism {
 public:
  const GroupPtr& group() const { return group_; }
  Element apply(Element x) const { return map_[x]; }
  Element apply_inverse(Element x) const { return inverse_map_[x]; }
  const std::vector<Element>& map() const { return map_; }
  const std::vector<Element>& inverse_map() const { return inverse_map_; }

  // Order as a permutation (lcm of cycle lengths).
  long long order() const { return order_; }

  // phi^n(x) for any integer n; n is reduced modulo the permutation order.
  Element pow_apply(long long n, Element x) const {
    long long r = n % order_;
    if (r < 0) r += order_;
    Element y = x;
    for (long long i = 0; i < r; ++i) y = map_[y];
    return y;
  }

  bool operator==(const Automorphism& o) const {
    return group_ == o.group_ && map_ == o.map_;
  }

  static Automorphism build(const GroupPtr& g, const std::vector<Element>& map);
  static Automorphism identity(const GroupPtr& g) {
    std::vector<Element> id(g->order());
    for (int i = 0; i < g->order(); ++i) id[i] = i;
    return build(g, id);
  }

 private:
  Automorphism() = default;

  GroupPtr group_;
  std::vector<Element> map_;
  std::vector<Element> inverse_map_;
  long long order_ = 1;
};

inline Automorphism Automorphism::build(const GroupPtr& g,
                                        const std::vector<Element>& map) {
  const int n = g->order();
  if (static_cast<int>(map.size()) != n)
    throw NotBijective("map has " + std::to_string(map.size()) +
                       " entries, group order is " + std::to_string(n));
  std::vector<Element> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    const Element y = map[x];
    if (y < 0 || y >= n)
      throw NotBijective("map[" + std::to_string(x) + "] = " +
                         std::to_string(y) + " out of range");
    if (inv[y] != -1)
      throw NotBijective("map[" + std::to_string(inv[y]) + "] = map[" +
                         std::to_string(x) + "] = " + std::to_string(y));
    inv[y] = x;
  }
  if (map[g->identity()] != g->identity())
    throw NotHomomorphism("identity maps to " +
                          std::to_string(map[g->identity()]));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map[g->mul(x, y)] != g->mul(map[x], map[y]))
        throw NotHomomorphism("witness pair (" + std::to_string(x) + "," +
                              std::to_string(y) + ")");

  Automorphism a;
  a.group_ = g;
  a.map_ = map;
  a.inverse_map_ = std::move(inv);
  // permutation order = lcm of cycle lengths
  std::vector<bool> seen(n, false);
  long long ord = 1;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    long long len = 0;
    for (Element y = x; !seen[y]; y = map[y]) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  a.order_ = ord;
  return a;
}

// phi is distal iff no orbit {phi^n(x)}, x != e, meets the identity. On a
// finite group every orbit is finite and the check is an exact enumeration;
// it always passes because phi is a bijection fixing e.
inline bool distality_check(const Automorphism& phi) {
  const auto& g = phi.group();
  for (Element x = 0; x < g->order(); ++x) {
    if (x == g->identity()) continue;
    Element y = x;
    do {
      if (y == g->identity()) return false;
      y = phi.apply(y);
    } while (y != x);
  }
  return true;
}

// Pointwise distality: no conjugation orbit {g^n x g^-n}, x != e, meets the
// identity. Exact orbit enumeration over all pairs.
inline bool pointwise_distal_check(const GroupPtr& g) {
  for (Element c = 0; c < g->order(); ++c) {
    const Element cinv = g->inv(c);
    for (Element x = 0; x < g->order(); ++x) {
      if (x == g->identity()) continue;
      Element y = x;
      do {
        if (y == g->identity()) return false;
        y = g->mul(g->mul(c, y), cinv);
      } while (y != x);
    }
  }
  return true;
}

// All automorphisms of g in lexicographic map order, at most `cap` of them
// (cap <= 0 means no cap). Backtracking over images with partial
// homomorphism checks; fine for the intended orders.
inline std::vector<Automorphism> enumerate_automorphisms(const GroupPtr& g,
                                                         int cap = 0) {
  const int n = g->order();
  std::vector<int> elem_order(n);
  for (int x = 0; x < n; ++x) elem_order[x] = g->element_order(x);

  std::vector<Element> img(n, -1);
  std::vector<bool> used(n, false);
  img[g->identity()] = g->identity();
  used[g->identity()] = true;

  std::vector<Automorphism> out;
  // assign images to non-identity elements in index order
  std::vector<Element> slots;
  for (int x = 0; x < n; ++x)
    if (x != g->identity()) slots.push_back(x);

  auto consistent = [&](Element x) {
    for (int y = 0; y < n; ++y) {
      if (img[y] < 0) continue;
      const Element xy = g->mul(x, y);
      if (img[xy] >= 0 && img[xy] != g->mul(img[x], img[y])) return false;
      const Element yx = g->mul(y, x);
      if (img[yx] >= 0 && img[yx] != g->mul(img[y], img[x])) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (cap > 0 && static_cast<int>(out.size()) >= cap) return;
    if (depth == slots.size()) {
      out.push_back(Automorphism::build(g, img));
      return;
    }
    const Element x = slots[depth];
    for (Element y = 0; y < n; ++y) {
      if (used[y] || elem_order[y] != elem_order[x]) continue;
      img[x] = y;
      used[y] = true;
      if (consistent(x)) rec(depth + 1);
      img[x] = -1;
      used[y] = false;
      if (cap > 0 && static_cast<int>(out.size()) >= cap) return;
    }
  };
  rec(0);
  return out;
}

}  // namespace gsde
