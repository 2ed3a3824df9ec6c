#pragma once

// Sparse probability measures on Z x| G, keyed by the integer fiber. Each
// fiber carries its total mass and the conditional law on G.

#include <map>
#include <utility>
#include <vector>

#include "gsde/measure.hpp"
#include "gsde/semidirect.hpp"

namespace gsde {

class SemidirectMeasure {
 public:
  struct Fiber {
    Rational mass;
    RationalMeasure conditional;
  };

  SemidirectMeasure(Automorphism phi, std::map<long long, Fiber> fibers)
      : phi_(std::move(phi)), fibers_(std::move(fibers)) {
    Rational total = 0;
    for (const auto& [n, f] : fibers_) {
      if (f.mass <= 0)
        throw InvalidMeasure("fiber " + std::to_string(n) +
                             " has nonpositive mass " + to_string(f.mass));
      if (f.conditional.group() != phi_.group())
        throw GroupMismatch("fiber conditional lives on a different group");
      total += f.mass;
    }
    if (total != 1)
      throw InvalidMeasure("fiber masses sum to " + to_string(total));
  }

  const Automorphism& phi() const { return phi_; }
  const std::map<long long, Fiber>& fibers() const { return fibers_; }

  const Rational& mass(long long n) const {
    static const Rational zero(0);
    auto it = fibers_.find(n);
    return it == fibers_.end() ? zero : it->second.mass;
  }

 private:
  Automorphism phi_;
  std::map<long long, Fiber> fibers_;
};

// 1 (x) mu: the lift of mu to the fiber n = 1.
inline SemidirectMeasure sd_lift(const RationalMeasure& mu,
                                 const Automorphism& phi) {
  if (phi.group() != mu.group())
    throw GroupMismatch("automorphism of a different group");
  std::map<long long, SemidirectMeasure::Fiber> fibers;
  fibers.emplace(1, SemidirectMeasure::Fiber{Rational(1), mu});
  return SemidirectMeasure(phi, std::move(fibers));
}

// Fiber-wise convolution under (n,g)(m,h) = (n+m, g phi^n(h)).
inline SemidirectMeasure sd_convolve(const SemidirectMeasure& a,
                                     const SemidirectMeasure& b) {
  if (!(a.phi() == b.phi()))
    throw AutomorphismMismatch("semidirect measures twisted differently");
  const auto& g = a.phi().group();
  std::map<long long, std::vector<Rational>> acc;  // unnormalized weights
  for (const auto& [n, fa] : a.fibers()) {
    for (const auto& [m, fb] : b.fibers()) {
      const RationalMeasure part =
          convolve(fa.conditional, pushforward_pow(a.phi(), n, fb.conditional));
      auto& bucket = acc[n + m];
      if (bucket.empty()) bucket.assign(g->order(), Rational(0));
      const Rational scale = fa.mass * fb.mass;
      for (Element x = 0; x < g->order(); ++x)
        bucket[x] += scale * part.at(x);
    }
  }
  std::map<long long, SemidirectMeasure::Fiber> fibers;
  for (auto& [n, w] : acc) {
    Rational mass = 0;
    for (const auto& v : w) mass += v;
    if (mass == 0) continue;
    std::vector<Rational> cond(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) cond[i] = w[i] / mass;
    fibers.emplace(n, SemidirectMeasure::Fiber{
                          mass, RationalMeasure(g, std::move(cond))});
  }
  return SemidirectMeasure(a.phi(), std::move(fibers));
}

inline SemidirectMeasure sd_power(const SemidirectMeasure& rho, int n) {
  if (n < 1) throw InvalidMeasure("sd_power needs n >= 1");
  SemidirectMeasure acc = rho;
  for (int i = 1; i < n; ++i) acc = sd_convolve(acc, rho);
  return acc;
}

// Reversal on Z x| G: mass of (n,g) moves to (n,g)^-1 = (-n, phi^-n(g^-1)).
inline SemidirectMeasure sd_reverse(const SemidirectMeasure& rho) {
  std::map<long long, SemidirectMeasure::Fiber> fibers;
  for (const auto& [n, f] : rho.fibers()) {
    RationalMeasure cond =
        pushforward_pow(rho.phi(), -n, reverse(f.conditional));
    fibers.emplace(-n, SemidirectMeasure::Fiber{f.mass, std::move(cond)});
  }
  return SemidirectMeasure(rho.phi(), std::move(fibers));
}

}  // namespace gsde
