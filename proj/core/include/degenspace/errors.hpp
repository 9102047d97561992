#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace degenspace {

// Stable identifiers for domain failures. The CLI prints these names
// verbatim, so scripts can match on them.
enum class ErrorCode {
  NotInvertible,
  NotUnitNorm,
  DegenerateIsometry,
  NullVector,
  OnNullPlane,
  NullNorm,
  NotOnSphere,
  OnBranchLine,
  BranchDomain,
  AtPole,
  SamePoint,
  ConjugateAbscissas,
  NonFiniteState,
};

std::string_view to_string(ErrorCode code);

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }

 private:
  ErrorCode code_;
};

}  // namespace degenspace
