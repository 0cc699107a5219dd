#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jacobi2d {

enum class ErrorCode {
  // Coefficient validation.
  PeriodTooSmall,
  ShapeMismatch,
  NonRealDiagonal,
  NonFinite,
  // Preconditions on indices and shapes.
  IndexOutOfRange,
  DimensionMismatch,
  DimensionCap,
  // Numerical preconditions.
  NotHermitian,
  NotDiagonalHopping,
  NoConvergence,
  // Input documents.
  Parse,
  Io,
};

std::string_view to_string(ErrorCode code);

/// True for the codes produced by coefficient validation (the CLI maps
/// these to exit status 2).
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jacobi2d
