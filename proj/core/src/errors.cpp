#include "degenspace/errors.hpp"

namespace degenspace {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotUnitNorm: return "NotUnitNorm";
    case ErrorCode::DegenerateIsometry: return "DegenerateIsometry";
    case ErrorCode::NullVector: return "NullVector";
    case ErrorCode::OnNullPlane: return "OnNullPlane";
    case ErrorCode::NullNorm: return "NullNorm";
    case ErrorCode::NotOnSphere: return "NotOnSphere";
    case ErrorCode::OnBranchLine: return "OnBranchLine";
    case ErrorCode::BranchDomain: return "BranchDomain";
    case ErrorCode::AtPole: return "AtPole";
    case ErrorCode::SamePoint: return "SamePoint";
    case ErrorCode::ConjugateAbscissas: return "ConjugateAbscissas";
    case ErrorCode::NonFiniteState: return "NonFiniteState";
  }
  return "UnknownError";
}

DomainError::DomainError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace degenspace
