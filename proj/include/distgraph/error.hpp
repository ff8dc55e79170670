#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace distgraph {

enum class ErrorCode {
  IndexOutOfRange,
  BadBase,
  MixedBase,
  DepthExceeded,
  DegenerateTriple,
  InvalidGraph,
  InvalidCertificate,
  InvalidPortrait,
  EmptySpec,
  OnBoundary,
  GenericityViolation,
  RootFindingDiverged,
  IllConditioned,
  NonEscaping,
  BranchAmbiguity,
  NoEscapingCritical,
  ResolutionTooCoarse,
  OutsideBand,
  NearBoundary,
  InconsistentCombinatorics,
  Precondition,
  Parse,
  Io,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace distgraph
