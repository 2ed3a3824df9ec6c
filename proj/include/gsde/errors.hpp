#pragma once

#include <stdexcept>
#include <string>

namespace gsde {

// Base for every validation/verification failure raised by the library.
// `kind()` is the machine-readable reason surfaced in CLI reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define GSDE_ERROR(Name)                                             \
  struct Name : Error {                                              \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  }

GSDE_ERROR(NotLatinSquare);
GSDE_ERROR(NotAssociative);
GSDE_ERROR(NoIdentity);
GSDE_ERROR(NoInverse);
GSDE_ERROR(NotBijective);
GSDE_ERROR(NotHomomorphism);
GSDE_ERROR(NotSubgroup);
GSDE_ERROR(GroupMismatch);
GSDE_ERROR(AutomorphismMismatch);
GSDE_ERROR(InvalidMeasure);
GSDE_ERROR(NotConverged);
GSDE_ERROR(LimitNotConverged);
GSDE_ERROR(LimitNotIdempotent);
GSDE_ERROR(NotInvariant);
GSDE_ERROR(HypothesisViolation);
GSDE_ERROR(TheoremViolation);
GSDE_ERROR(InsufficientSamples);
GSDE_ERROR(BadInputFile);

#undef GSDE_ERROR

}  // namespace gsde
