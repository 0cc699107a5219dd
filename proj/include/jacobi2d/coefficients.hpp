#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace jacobi2d {

using Complex = std::complex<double>;

/// Unvalidated coefficient data as read from an input document. Nested
/// vectors so that ragged or mis-sized arrays can be represented and
/// rejected by validate().
struct RawCoefficients {
  long p1 = 0;
  long p2 = 0;
  std::vector<std::vector<Complex>> a0;
  std::vector<std::vector<Complex>> a1;
  std::vector<std::vector<Complex>> b0;
  std::vector<std::vector<Complex>> b1;  // imaginary parts must be exactly zero
};

/// One fundamental cell of the doubly periodic coefficients a0, a1, b0, b1
/// of a 2D periodic Jacobi operator with periods (p1, p2).
///
/// Lattice indices are 1-based throughout the public API: n in [1, p1] runs
/// along the first lattice direction, m in [1, p2] along the second. The
/// cell is stored row-major with flat = (n - 1) * p2 + (m - 1), which is
/// also the row order of every fiber matrix.
///
/// Instances are immutable; the only way to obtain one is validate() or one
/// of the builders below, so every instance satisfies p1, p2 >= 3, finite
/// entries and real b1.
class CoefficientField {
 public:
  int p1() const noexcept { return p1_; }
  int p2() const noexcept { return p2_; }
  std::size_t sites() const noexcept { return static_cast<std::size_t>(p1_) * p2_; }

  /// Row-major flat index of the cell site (n, m), both 1-based.
  std::size_t flat(int n, int m) const noexcept {
    return static_cast<std::size_t>(n - 1) * p2_ + static_cast<std::size_t>(m - 1);
  }

  /// Periodic access: any integer (n, m) is reduced into the cell.
  Complex a0(int n, int m) const noexcept { return a0_[wrap(n, m)]; }
  Complex a1(int n, int m) const noexcept { return a1_[wrap(n, m)]; }
  Complex b0(int n, int m) const noexcept { return b0_[wrap(n, m)]; }
  double b1(int n, int m) const noexcept { return b1_[wrap(n, m)]; }

  std::span<const Complex> a0_cell() const noexcept { return a0_; }
  std::span<const Complex> a1_cell() const noexcept { return a1_; }
  std::span<const Complex> b0_cell() const noexcept { return b0_; }
  std::span<const double> b1_cell() const noexcept { return b1_; }

  /// True when every a0 entry is exactly zero (the A_n diagonal case).
  bool has_diagonal_hopping() const noexcept;

  bool operator==(const CoefficientField&) const = default;

 private:
  friend CoefficientField validate(const RawCoefficients& raw);

  CoefficientField() = default;

  std::size_t wrap(int n, int m) const noexcept {
    const int nn = ((n - 1) % p1_ + p1_) % p1_;
    const int mm = ((m - 1) % p2_ + p2_) % p2_;
    return static_cast<std::size_t>(nn) * p2_ + static_cast<std::size_t>(mm);
  }

  int p1_ = 0;
  int p2_ = 0;
  std::vector<Complex> a0_;
  std::vector<Complex> a1_;
  std::vector<Complex> b0_;
  std::vector<double> b1_;
};

/// Checks raw data and builds a field. Throws Error with PeriodTooSmall,
/// ShapeMismatch, NonFinite or NonRealDiagonal. Checks run in that order.
CoefficientField validate(const RawCoefficients& raw);

/// Inverse of validate(); b1 is returned with zero imaginary parts.
RawCoefficients to_raw(const CoefficientField& field);

/// Cyclic relabeling that moves cell site (alpha, beta) to (p1, p2):
///   c'(n, m) = c((n + alpha - p1 - 1 mod p1) + 1, (m + beta - p2 - 1 mod p2) + 1)
/// for all four arrays. relabel(f, p1, p2) == f.
/// Throws IndexOutOfRange unless 1 <= alpha <= p1 and 1 <= beta <= p2.
CoefficientField relabel(const CoefficientField& field, int alpha, int beta);

/// A_n = 0, B_n = S + S^-1 + 4n: a0 = a1 = 0, b0 = 1, b1(n, m) = 4n.
CoefficientField example_shifted_schrodinger(int p1, int p2);

/// A_n = I, B_n = diag(4m mod 4 p2): a0 = b0 = 0, a1 = 1, b1(n, m) = 4m mod 4 p2.
CoefficientField example_diagonal_hopping(int p1, int p2);

}  // namespace jacobi2d
