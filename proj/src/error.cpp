#include "kschmidt/error.hpp"

namespace kschmidt {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotAGroup: return "NotAGroup";
    case ErrorKind::kNotAPermutation: return "NotAPermutation";
    case ErrorKind::kNotASubgroup: return "NotASubgroup";
    case ErrorKind::kOrderBudgetExceeded: return "OrderBudgetExceeded";
    case ErrorKind::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::kNotNormal: return "NotNormal";
    case ErrorKind::kNotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::kSourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorKind::kInternalContradiction: return "InternalContradiction";
    case ErrorKind::kPreconditionViolated: return "PreconditionViolated";
    case ErrorKind::kNoAutomorphicSummand: return "NoAutomorphicSummand";
    case ErrorKind::kNotADecomposition: return "NotADecomposition";
    case ErrorKind::kUniquenessViolation: return "UniquenessViolation";
    case ErrorKind::kNotIsomorphicAmbient: return "NotIsomorphicAmbient";
    case ErrorKind::kCancellationFailure: return "CancellationFailure";
    case ErrorKind::kDivisibilityViolated: return "DivisibilityViolated";
    case ErrorKind::kNoCoherentChain: return "NoCoherentChain";
    case ErrorKind::kContainmentViolated: return "ContainmentViolated";
    case ErrorKind::kInvalidTower: return "InvalidTower";
    case ErrorKind::kUnknownName: return "UnknownName";
    case ErrorKind::kBadParams: return "BadParams";
    case ErrorKind::kBadInput: return "BadInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

}  // namespace kschmidt
