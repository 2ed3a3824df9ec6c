#pragma once

// Exact probability measures on a finite group and their convolution
// calculus. Weights are arbitrary-precision rationals and every operation is
// closed over them; equality below always means exact equality.

#include <algorithm>
#include <string>
#include <vector>

#include "gsde/automorphism.hpp"
#include "gsde/errors.hpp"
#include "gsde/group.hpp"
#include "gsde/rational.hpp"

namespace gsde {

class RationalMeasure {
 public:
  RationalMeasure(GroupPtr group, std::vector<Rational> weights)
      : group_(std::move(group)), weights_(std::move(weights)) {
    if (static_cast<int>(weights_.size()) != group_->order())
      throw InvalidMeasure("weight table has " +
                           std::to_string(weights_.size()) +
                           " entries, group order is " +
                           std::to_string(group_->order()));
    Rational total = 0;
    bool some_positive = false;
    for (int i = 0; i < group_->order(); ++i) {
      if (weights_[i] < 0)
        throw InvalidMeasure("negative weight " + to_string(weights_[i]) +
                             " at element " + std::to_string(i));
      if (weights_[i] > 0) some_positive = true;
      total += weights_[i];
    }
    if (!some_positive) throw InvalidMeasure("empty support");
    if (total != 1)
      throw InvalidMeasure("weights sum to " + to_string(total) + ", not 1");
  }

  const GroupPtr& group() const { return group_; }
  const Rational& at(Element x) const { return weights_[x]; }
  const std::vector<Rational>& weights() const { return weights_; }

  std::vector<Element> support() const {
    std::vector<Element> s;
    for (int i = 0; i < group_->order(); ++i)
      if (weights_[i] > 0) s.push_back(i);
    return s;
  }

  Element min_support() const {
    for (int i = 0; i < group_->order(); ++i)
      if (weights_[i] > 0) return i;
    return group_->identity();  // unreachable: support is nonempty
  }

  bool operator==(const RationalMeasure& o) const {
    return group_ == o.group_ && weights_ == o.weights_;
  }

  // Exact state key, used by the sequence-limit machinery.
  std::string key() const {
    std::string s;
    for (const auto& w : weights_) {
      s += to_string(w);
      s += '|';
    }
    return s;
  }

  static RationalMeasure dirac(const GroupPtr& g, Element x) {
    std::vector<Rational> w(g->order(), Rational(0));
    w.at(x) = 1;
    return RationalMeasure(g, std::move(w));
  }

  static RationalMeasure uniform_on(const GroupPtr& g,
                                    const std::vector<Element>& set) {
    if (set.empty()) throw InvalidMeasure("empty support");
    std::vector<Rational> w(g->order(), Rational(0));
    const Rational share(1, set.size());
    for (Element x : set) w.at(x) += share;
    return RationalMeasure(g, std::move(w));
  }

 private:
  GroupPtr group_;
  std::vector<Rational> weights_;
};

inline void require_same_group(const RationalMeasure& a,
                               const RationalMeasure& b) {
  if (a.group() != b.group())
    throw GroupMismatch("measures live on different groups");
}

// (mu*lam)(g) = sum_h mu(g h^-1) lam(h)
inline RationalMeasure convolve(const RationalMeasure& mu,
                                const RationalMeasure& lam) {
  require_same_group(mu, lam);
  const auto& g = mu.group();
  std::vector<Rational> w(g->order(), Rational(0));
  for (Element a = 0; a < g->order(); ++a) {
    if (mu.at(a) == 0) continue;
    for (Element b = 0; b < g->order(); ++b) {
      if (lam.at(b) == 0) continue;
      w[g->mul(a, b)] += mu.at(a) * lam.at(b);
    }
  }
  return RationalMeasure(g, std::move(w));
}

// mu-check: weight of g moves to g^-1.
inline RationalMeasure reverse(const RationalMeasure& mu) {
  const auto& g = mu.group();
  std::vector<Rational> w(g->order(), Rational(0));
  for (Element x = 0; x < g->order(); ++x) w[g->inv(x)] = mu.at(x);
  return RationalMeasure(g, std::move(w));
}

// phi(mu): weight of g moves to phi(g).
inline RationalMeasure pushforward(const Automorphism& phi,
                                   const RationalMeasure& mu) {
  if (phi.group() != mu.group())
    throw GroupMismatch("automorphism of a different group");
  const auto& g = mu.group();
  std::vector<Rational> w(g->order(), Rational(0));
  for (Element x = 0; x < g->order(); ++x) w[phi.apply(x)] = mu.at(x);
  return RationalMeasure(g, std::move(w));
}

inline RationalMeasure pushforward_pow(const Automorphism& phi, long long n,
                                       const RationalMeasure& mu) {
  if (phi.group() != mu.group())
    throw GroupMismatch("automorphism of a different group");
  const auto& g = mu.group();
  std::vector<Rational> w(g->order(), Rational(0));
  for (Element x = 0; x < g->order(); ++x) w[phi.pow_apply(n, x)] = mu.at(x);
  return RationalMeasure(g, std::move(w));
}

// x*mu, i.e. delta_x * mu.
inline RationalMeasure shift_left(Element x, const RationalMeasure& mu) {
  const auto& g = mu.group();
  std::vector<Rational> w(g->order(), Rational(0));
  for (Element y = 0; y < g->order(); ++y) w[g->mul(x, y)] = mu.at(y);
  return RationalMeasure(g, std::move(w));
}

// mu*x, i.e. mu * delta_x.
inline RationalMeasure shift_right(const RationalMeasure& mu, Element x) {
  const auto& g = mu.group();
  std::vector<Rational> w(g->order(), Rational(0));
  for (Element y = 0; y < g->order(); ++y) w[g->mul(y, x)] = mu.at(y);
  return RationalMeasure(g, std::move(w));
}

// omega_K: normalized Haar measure, uniform on the subgroup.
inline RationalMeasure haar(const Subgroup& k) {
  return RationalMeasure::uniform_on(k.parent(), k.members());
}

// Left K-invariance: omega_K * mu = mu, cross-checked against the definition
// x*mu = mu for every x in K (the two are equivalent; a disagreement would be
// an arithmetic bug, so it aborts).
inline bool is_left_invariant(const RationalMeasure& mu, const Subgroup& k) {
  if (k.parent() != mu.group())
    throw GroupMismatch("subgroup of a different group");
  const bool via_haar = convolve(haar(k), mu) == mu;
  bool via_shifts = true;
  for (Element x : k.members())
    if (!(shift_left(x, mu) == mu)) {
      via_shifts = false;
      break;
    }
  if (via_haar != via_shifts)
    throw TheoremViolation("haar-convolution and shift tests disagree");
  return via_haar;
}

// Total variation distance (1/2) sum |mu - lam|, exact.
inline Rational tv_distance(const RationalMeasure& mu,
                            const RationalMeasure& lam) {
  require_same_group(mu, lam);
  Rational s = 0;
  for (Element x = 0; x < mu.group()->order(); ++x) {
    Rational d = mu.at(x) - lam.at(x);
    if (d < 0) d = -d;
    s += d;
  }
  return s / 2;
}

}  // namespace gsde
