#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace jacobi2d {

/// Dense square complex matrix, row-major. Fibers are small (p1*p2 rows),
/// so no sparse storage is used anywhere.
class ComplexMatrix {
 public:
  using value_type = std::complex<double>;

  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t size() const noexcept { return n_; }

  value_type& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * n_ + j];
  }

  std::span<value_type> data() noexcept { return data_; }
  std::span<const value_type> data() const noexcept { return data_; }

  /// Writes v at (i, j) and conj(v) at (j, i). For i == j only the real
  /// part is stored.
  void set_hermitian_pair(std::size_t i, std::size_t j, value_type v) noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(double s) noexcept;

  /// Adds `values[i]` to entry (i, i) scaled by `sign`.
  void add_diagonal(std::span<const double> values, double sign = 1.0);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<value_type> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);

/// Entrywise complex conjugate.
ComplexMatrix conjugate(const ComplexMatrix& m);

double max_abs_entry(const ComplexMatrix& m) noexcept;
double frobenius_norm(const ComplexMatrix& m) noexcept;
std::complex<double> trace(const ComplexMatrix& m) noexcept;

/// max |m(i,j) - conj(m(j,i))| over all entries.
double hermiticity_defect(const ComplexMatrix& m) noexcept;

/// Number of entries that are not exactly zero.
std::size_t count_nonzeros(const ComplexMatrix& m) noexcept;

}  // namespace jacobi2d
