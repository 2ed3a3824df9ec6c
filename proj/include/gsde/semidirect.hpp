#pragma once

// Element arithmetic in the semidirect product Z x| G where the Z-action is a
// fixed automorphism phi: (n,g)(m,h) = (n+m, g*phi^n(h)).

#include "gsde/automorphism.hpp"

namespace gsde {

struct SdElement {
  long long n = 0;
  Element g = 0;

  bool operator==(const SdElement&) const = default;
};

inline SdElement semidirect_mul(const Automorphism& phi, const SdElement& a,
                                const SdElement& b) {
  return {a.n + b.n, phi.group()->mul(a.g, phi.pow_apply(a.n, b.g))};
}

// (n,g)^-1 = (-n, phi^-n(g^-1))
inline SdElement semidirect_inv(const Automorphism& phi, const SdElement& a) {
  return {-a.n, phi.pow_apply(-a.n, phi.group()->inv(a.g))};
}

inline SdElement semidirect_identity(const Automorphism& phi) {
  return {0, phi.group()->identity()};
}

inline SdElement semidirect_pow(const Automorphism& phi, const SdElement& a,
                                long long k) {
  SdElement acc = semidirect_identity(phi);
  SdElement base = k >= 0 ? a : semidirect_inv(phi, a);
  long long reps = k >= 0 ? k : -k;
  for (long long i = 0; i < reps; ++i) acc = semidirect_mul(phi, acc, base);
  return acc;
}

}  // namespace gsde
