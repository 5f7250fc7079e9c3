#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kschmidt {

enum class ErrorKind {
  kNotAGroup,
  kNotAPermutation,
  kNotASubgroup,
  kOrderBudgetExceeded,
  kSearchBudgetExceeded,
  kNotNormal,
  kNotAHomomorphism,
  kSourceTargetMismatch,
  kInternalContradiction,
  kPreconditionViolated,
  kNoAutomorphicSummand,
  kNotADecomposition,
  kUniquenessViolation,
  kNotIsomorphicAmbient,
  kCancellationFailure,
  kDivisibilityViolated,
  kNoCoherentChain,
  kContainmentViolated,
  kInvalidTower,
  kUnknownName,
  kBadParams,
  kBadInput,
};

// Stable identifier used in CLI payloads, e.g. "NotAGroup".
std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view kind_name() const { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace kschmidt
