#include "lcx/error.hpp"

namespace lcx {

std::string_view toString(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kSpaceMismatch: return "space-mismatch";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kNonFinite: return "non-finite";
    case ErrorCode::kIncompatibleSet: return "incompatible-set";
    case ErrorCode::kCapReached: return "cap-reached";
    case ErrorCode::kInternalConstruction: return "internal-construction";
    case ErrorCode::kSpec: return "spec";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

CapReachedError::CapReachedError(const std::string& what, double best)
    : Error(ErrorCode::kCapReached, what), best_(best) {}

SpecError::SpecError(std::string field, const std::string& message)
    : Error(ErrorCode::kSpec, field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

}  // namespace lcx
