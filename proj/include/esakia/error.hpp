#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace esakia {

enum class ErrorCode {
  // poset-core
  CycleError,
  NonHasseEdge,
  InvalidElement,
  NotAPartialOrder,
  NotAChain,
  EmptyChain,
  NotATree,
  NotACover,
  NotOrderOpen,
  SizeCap,
  // topology-core
  OversizeSubbase,
  // algebra-core
  NotALattice,
  NotDistributive,
  NoMaximum,
  ResiduationFailure,
  // duality
  DualityFailure,
  HornMismatch,
  // constructions
  NotARootSystem,
  LimitHeightUnsupported,
  NotOpenAtLevel,
  PreconditionFxNotInU,
  NonTermination,
  NotComparablePrecondition,
  UnknownName,
  EnumerationLimit,
  InternalInvariant,
  // toolkit
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace esakia
