#include "distgraph/error.hpp"

namespace distgraph {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::BadBase: return "BAD_BASE";
    case ErrorCode::MixedBase: return "MIXED_BASE";
    case ErrorCode::DepthExceeded: return "DEPTH_EXCEEDED";
    case ErrorCode::DegenerateTriple: return "DEGENERATE_TRIPLE";
    case ErrorCode::InvalidGraph: return "INVALID_GRAPH";
    case ErrorCode::InvalidCertificate: return "INVALID_CERTIFICATE";
    case ErrorCode::InvalidPortrait: return "INVALID_PORTRAIT";
    case ErrorCode::EmptySpec: return "EMPTY_SPEC";
    case ErrorCode::OnBoundary: return "ON_BOUNDARY";
    case ErrorCode::GenericityViolation: return "GENERICITY_VIOLATION";
    case ErrorCode::RootFindingDiverged: return "ROOT_FINDING_DIVERGED";
    case ErrorCode::IllConditioned: return "ILL_CONDITIONED";
    case ErrorCode::NonEscaping: return "NON_ESCAPING";
    case ErrorCode::BranchAmbiguity: return "BRANCH_AMBIGUITY";
    case ErrorCode::NoEscapingCritical: return "NO_ESCAPING_CRITICAL";
    case ErrorCode::ResolutionTooCoarse: return "RESOLUTION_TOO_COARSE";
    case ErrorCode::OutsideBand: return "OUTSIDE_BAND";
    case ErrorCode::NearBoundary: return "NEAR_BOUNDARY";
    case ErrorCode::InconsistentCombinatorics: return "INCONSISTENT_COMBINATORICS";
    case ErrorCode::Precondition: return "PRECONDITION";
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::Io: return "IO";
  }
  return "UNKNOWN";
}

}  // namespace distgraph
