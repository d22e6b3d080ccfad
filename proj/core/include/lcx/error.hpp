#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcx {

enum class ErrorCode {
  kSpaceMismatch,
  kInvalidArgument,
  kNonFinite,
  kIncompatibleSet,
  kCapReached,
  kInternalConstruction,
  kSpec,
};

std::string_view toString(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// An iteration or refinement budget ran out before the stopping rule fired.
/// Carries the best value seen so far (a residual or a quadrature estimate).
class CapReachedError : public Error {
 public:
  CapReachedError(const std::string& what, double best);

  double best() const noexcept { return best_; }

 private:
  double best_;
};

/// A problem description failed validation. `field` names the offending
/// JSON path, e.g. "measure.atoms[2].weight".
class SpecError : public Error {
 public:
  SpecError(std::string field, const std::string& message);

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace lcx
