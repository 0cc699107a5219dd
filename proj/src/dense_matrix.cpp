#include "jacobi2d/dense_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace jacobi2d {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

void ComplexMatrix::set_hermitian_pair(std::size_t i, std::size_t j, value_type v) noexcept {
  if (i == j) {
    (*this)(i, i) = v.real();
    return;
  }
  (*this)(i, j) = v;
  (*this)(j, i) = std::conj(v);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  assert(n_ == rhs.n_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  assert(n_ == rhs.n_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double s) noexcept {
  for (auto& z : data_) z *= s;
  return *this;
}

void ComplexMatrix::add_diagonal(std::span<const double> values, double sign) {
  assert(values.size() == n_);
  for (std::size_t i = 0; i < n_; ++i) (*this)(i, i) += sign * values[i];
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix conjugate(const ComplexMatrix& m) {
  ComplexMatrix out(m.size());
  auto src = m.data();
  auto dst = out.data();
  std::transform(src.begin(), src.end(), dst.begin(), [](auto z) { return std::conj(z); });
  return out;
}

double max_abs_entry(const ComplexMatrix& m) noexcept {
  double best = 0.0;
  for (auto z : m.data()) best = std::max(best, std::abs(z));
  return best;
}

double frobenius_norm(const ComplexMatrix& m) noexcept {
  double sum = 0.0;
  for (auto z : m.data()) sum += std::norm(z);
  return std::sqrt(sum);
}

std::complex<double> trace(const ComplexMatrix& m) noexcept {
  std::complex<double> t = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m(i, i);
  return t;
}

double hermiticity_defect(const ComplexMatrix& m) noexcept {
  double worst = 0.0;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

std::size_t count_nonzeros(const ComplexMatrix& m) noexcept {
  return static_cast<std::size_t>(std::count_if(m.data().begin(), m.data().end(),
                                                [](auto z) { return z != std::complex<double>{}; }));
}

}  // namespace jacobi2d
