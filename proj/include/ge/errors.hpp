#pragma once

#include <stdexcept>
#include <string>

namespace ge {

// Error categories map onto CLI exit codes: invariant/math failures -> 1,
// configuration problems -> 2, resource caps -> 3.
enum class ErrorCategory { Invariant, Config, Resource };

class Error : public std::runtime_error {
public:
  Error(ErrorCategory cat, std::string what_arg)
      : std::runtime_error(std::move(what_arg)), category_(cat) {}
  ErrorCategory category() const noexcept { return category_; }

private:
  ErrorCategory category_;
};

#define GE_DEFINE_ERROR(NAME, CATEGORY)                                       \
  class NAME : public Error {                                                 \
  public:                                                                     \
    explicit NAME(const std::string& msg)                                     \
        : Error(ErrorCategory::CATEGORY, std::string(#NAME) + ": " + msg) {}  \
  }

// group_theory
GE_DEFINE_ERROR(NotAGroup, Invariant);
GE_DEFINE_ERROR(IncompleteIrreps, Invariant);
GE_DEFINE_ERROR(NotUnitary, Invariant);
GE_DEFINE_ERROR(NonIntegerMultiplicity, Invariant);
GE_DEFINE_ERROR(NotARepresentation, Invariant);

// lattice
GE_DEFINE_ERROR(InvalidDims, Config);
GE_DEFINE_ERROR(EmptyRegion, Config);
GE_DEFINE_ERROR(FullRegion, Config);

// hilbert
GE_DEFINE_ERROR(BadSite, Invariant);
GE_DEFINE_ERROR(BadVertex, Invariant);
GE_DEFINE_ERROR(LengthMismatch, Invariant);
GE_DEFINE_ERROR(TooLarge, Resource);

// model
GE_DEFINE_ERROR(WrongGroup, Config);
GE_DEFINE_ERROR(ZeroState, Invariant);
GE_DEFINE_ERROR(NoConvergence, Invariant);

// entanglement
GE_DEFINE_ERROR(NotDensityMatrix, Invariant);
GE_DEFINE_ERROR(NotPhysical, Invariant);
GE_DEFINE_ERROR(SectorInconsistent, Invariant);

// gauging
GE_DEFINE_ERROR(NonAbelian, Config);
GE_DEFINE_ERROR(NotSymmetric, Invariant);

// perturbative
GE_DEFINE_ERROR(CornerSharing, Config);

// cli
GE_DEFINE_ERROR(ConfigError, Config);
GE_DEFINE_ERROR(TaskError, Invariant);
GE_DEFINE_ERROR(IoError, Invariant);

#undef GE_DEFINE_ERROR

} // namespace ge
