#include "jacobi2d/errors.hpp"

namespace jacobi2d {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PeriodTooSmall: return "PeriodTooSmall";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonRealDiagonal: return "NonRealDiagonal";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionCap: return "DimensionCap";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotDiagonalHopping: return "NotDiagonalHopping";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::PeriodTooSmall:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::NonRealDiagonal:
    case ErrorCode::NonFinite:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace jacobi2d
