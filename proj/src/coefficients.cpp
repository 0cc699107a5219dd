#include "jacobi2d/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jacobi2d/errors.hpp"

namespace jacobi2d {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_shape(const std::vector<std::vector<Complex>>& rows, long p1, long p2,
                 const char* name) {
  if (static_cast<long>(rows.size()) != p1) {
    throw Error(ErrorCode::ShapeMismatch, std::string(name) + " has " +
                                              std::to_string(rows.size()) + " rows, expected " +
                                              std::to_string(p1));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<long>(rows[i].size()) != p2) {
      throw Error(ErrorCode::ShapeMismatch,
                  std::string(name) + " row " + std::to_string(i + 1) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(p2));
    }
  }
}

void check_finite(const std::vector<std::vector<Complex>>& rows, const char* name) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (!is_finite(rows[i][j])) {
        throw Error(ErrorCode::NonFinite, std::string(name) + "(" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + ") is not finite");
      }
    }
  }
}

std::vector<Complex> flatten(const std::vector<std::vector<Complex>>& rows) {
  std::vector<Complex> out;
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<std::vector<Complex>> unflatten(std::span<const Complex> cell, int p1, int p2) {
  std::vector<std::vector<Complex>> rows(p1);
  for (int n = 0; n < p1; ++n) {
    rows[n].assign(cell.begin() + static_cast<std::ptrdiff_t>(n) * p2,
                   cell.begin() + static_cast<std::ptrdiff_t>(n + 1) * p2);
  }
  return rows;
}

RawCoefficients blank_raw(int p1, int p2) {
  RawCoefficients raw;
  raw.p1 = p1;
  raw.p2 = p2;
  const std::vector<std::vector<Complex>> zero(p1, std::vector<Complex>(p2));
  raw.a0 = raw.a1 = raw.b0 = raw.b1 = zero;
  return raw;
}

void require_periods(long p1, long p2) {
  if (p1 < 3 || p2 < 3) {
    throw Error(ErrorCode::PeriodTooSmall, "periods must satisfy p1, p2 >= 3 (got p1=" +
                                               std::to_string(p1) + ", p2=" + std::to_string(p2) +
                                               ")");
  }
}

}  // namespace

bool CoefficientField::has_diagonal_hopping() const noexcept {
  return std::all_of(a0_.begin(), a0_.end(), [](Complex z) { return z == Complex{}; });
}

CoefficientField validate(const RawCoefficients& raw) {
  require_periods(raw.p1, raw.p2);
  check_shape(raw.a0, raw.p1, raw.p2, "a0");
  check_shape(raw.a1, raw.p1, raw.p2, "a1");
  check_shape(raw.b0, raw.p1, raw.p2, "b0");
  check_shape(raw.b1, raw.p1, raw.p2, "b1");

  check_finite(raw.a0, "a0");
  check_finite(raw.a1, "a1");
  check_finite(raw.b0, "b0");
  check_finite(raw.b1, "b1");

  // Input is declarative: any nonzero imaginary part on the diagonal is
  // rejected, there is no tolerance.
  for (std::size_t i = 0; i < raw.b1.size(); ++i) {
    for (std::size_t j = 0; j < raw.b1[i].size(); ++j) {
      if (raw.b1[i][j].imag() != 0.0) {
        throw Error(ErrorCode::NonRealDiagonal, "b1(" + std::to_string(i + 1) + "," +
                                                    std::to_string(j + 1) +
                                                    ") has a nonzero imaginary part");
      }
    }
  }

  CoefficientField field;
  field.p1_ = static_cast<int>(raw.p1);
  field.p2_ = static_cast<int>(raw.p2);
  field.a0_ = flatten(raw.a0);
  field.a1_ = flatten(raw.a1);
  field.b0_ = flatten(raw.b0);
  field.b1_.reserve(field.sites());
  for (const auto& row : raw.b1) {
    for (Complex z : row) field.b1_.push_back(z.real());
  }
  return field;
}

RawCoefficients to_raw(const CoefficientField& field) {
  RawCoefficients raw;
  raw.p1 = field.p1();
  raw.p2 = field.p2();
  raw.a0 = unflatten(field.a0_cell(), field.p1(), field.p2());
  raw.a1 = unflatten(field.a1_cell(), field.p1(), field.p2());
  raw.b0 = unflatten(field.b0_cell(), field.p1(), field.p2());
  std::vector<Complex> b1(field.b1_cell().begin(), field.b1_cell().end());
  raw.b1 = unflatten(b1, field.p1(), field.p2());
  return raw;
}

CoefficientField relabel(const CoefficientField& field, int alpha, int beta) {
  const int p1 = field.p1();
  const int p2 = field.p2();
  if (alpha < 1 || alpha > p1 || beta < 1 || beta > p2) {
    throw Error(ErrorCode::IndexOutOfRange, "relabel target (" + std::to_string(alpha) + "," +
                                                std::to_string(beta) + ") outside [1," +
                                                std::to_string(p1) + "]x[1," +
                                                std::to_string(p2) + "]");
  }
  RawCoefficients raw = blank_raw(p1, p2);
  for (int n = 1; n <= p1; ++n) {
    for (int m = 1; m <= p2; ++m) {
      // Periodic accessors reduce n + alpha - p1 into the cell.
      const int src_n = n + alpha - p1;
      const int src_m = m + beta - p2;
      raw.a0[n - 1][m - 1] = field.a0(src_n, src_m);
      raw.a1[n - 1][m - 1] = field.a1(src_n, src_m);
      raw.b0[n - 1][m - 1] = field.b0(src_n, src_m);
      raw.b1[n - 1][m - 1] = field.b1(src_n, src_m);
    }
  }
  return validate(raw);
}

CoefficientField example_shifted_schrodinger(int p1, int p2) {
  require_periods(p1, p2);
  RawCoefficients raw = blank_raw(p1, p2);
  for (int n = 1; n <= p1; ++n) {
    for (int m = 1; m <= p2; ++m) {
      raw.b0[n - 1][m - 1] = 1.0;
      raw.b1[n - 1][m - 1] = 4.0 * n;
    }
  }
  return validate(raw);
}

CoefficientField example_diagonal_hopping(int p1, int p2) {
  require_periods(p1, p2);
  RawCoefficients raw = blank_raw(p1, p2);
  for (int n = 1; n <= p1; ++n) {
    for (int m = 1; m <= p2; ++m) {
      raw.a1[n - 1][m - 1] = 1.0;
      raw.b1[n - 1][m - 1] = static_cast<double>((4 * m) % (4 * p2));
    }
  }
  return validate(raw);
}

}  // namespace jacobi2d
