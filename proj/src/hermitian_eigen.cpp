#include "jacobi2d/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "jacobi2d/errors.hpp"

namespace jacobi2d {

namespace {

using Complex = std::complex<double>;

constexpr double kHermitianRelTol = 1e-12;
constexpr int kMaxSweepsPerEigenvalue = 60;

void require_finite_hermitian(const ComplexMatrix& m) {
  for (auto z : m.data()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::NonFinite, "matrix has NaN/Inf entries");
    }
  }
  const double defect = hermiticity_defect(m);
  const double limit = kHermitianRelTol * max_abs_entry(m);
  if (defect > limit) {
    throw Error(ErrorCode::NotHermitian, "hermiticity defect " + std::to_string(defect) +
                                             " exceeds " + std::to_string(limit));
  }
}

// Householder reduction of a Hermitian matrix to a real symmetric
// tridiagonal one with the same eigenvalues. Step k annihilates column k
// below the subdiagonal with H = I - tau v v^*, applied as the rank-2
// update B <- B - v w^* - w v^* on the trailing block. The resulting
// complex subdiagonal entry alpha is replaced by |alpha|, which amounts to
// a similarity by a diagonal unitary.
void tridiagonalize(ComplexMatrix a, std::vector<double>& diag, std::vector<double>& offdiag) {
  const std::size_t n = a.size();
  diag.assign(n, 0.0);
  offdiag.assign(n > 0 ? n - 1 : 0, 0.0);
  if (n == 0) return;

  std::vector<Complex> v(n);
  std::vector<Complex> w(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t r = n - k - 1;  // length of the trailing block
    const std::size_t o = k + 1;

    double sc = 0.0;
    for (std::size_t i = 0; i < r; ++i) sc = std::max(sc, std::abs(a(o + i, k)));
    diag[k] = a(k, k).real();
    if (sc == 0.0) {
      offdiag[k] = 0.0;
      continue;
    }
    double ss = 0.0;
    for (std::size_t i = 0; i < r; ++i) ss += std::norm(a(o + i, k) / sc);
    const double sigma = sc * std::sqrt(ss);
    const Complex x0 = a(o, k);
    const double ax0 = std::abs(x0);
    const Complex phase = ax0 == 0.0 ? Complex{1.0} : x0 / ax0;
    const Complex alpha = -phase * sigma;

    for (std::size_t i = 0; i < r; ++i) v[i] = a(o + i, k);
    v[0] -= alpha;
    const double tau = 1.0 / (sigma * (sigma + ax0));  // 2 / |v|^2

    // p = tau B v, stored in w.
    for (std::size_t i = 0; i < r; ++i) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j < r; ++j) acc += a(o + i, o + j) * v[j];
      w[i] = tau * acc;
    }
    Complex vp = 0.0;
    for (std::size_t i = 0; i < r; ++i) vp += std::conj(v[i]) * w[i];
    const double half_k = 0.5 * tau * vp.real();
    for (std::size_t i = 0; i < r; ++i) w[i] -= half_k * v[i];

    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        a(o + i, o + j) -= v[i] * std::conj(w[j]) + w[i] * std::conj(v[j]);
      }
    }
    offdiag[k] = std::abs(alpha);
  }
  if (n >= 2) {
    diag[n - 2] = a(n - 2, n - 2).real();
    offdiag[n - 2] = std::abs(a(n - 1, n - 2));
  }
  diag[n - 1] = a(n - 1, n - 1).real();
}

}  // namespace

SpectrumList tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> offdiag) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return d;
  // e[i] couples i and i+1; e[n-1] is scratch.
  std::vector<double> e(offdiag.begin(), offdiag.end());
  e.resize(n, 0.0);
  const double eps = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (iter++ == kMaxSweepsPerEigenvalue) {
        throw Error(ErrorCode::NoConvergence,
                    "QL iteration did not converge for eigenvalue " + std::to_string(l));
      }
      // Wilkinson-type shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = m - 1;
      bool deflated = false;
      for (; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          // Underflow: split the problem and restart the sweep.
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

SpectrumList hermitian_eigenvalues(const ComplexMatrix& m) {
  require_finite_hermitian(m);
  const std::size_t n = m.size();
  // Symmetrize so both triangles agree bit for bit; a no-op on exactly
  // Hermitian input.
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  std::vector<double> diag;
  std::vector<double> offdiag;
  tridiagonalize(std::move(a), diag, offdiag);
  return tridiagonal_eigenvalues(std::move(diag), std::move(offdiag));
}

double min_eigenvalue(const ComplexMatrix& m) {
  const SpectrumList values = hermitian_eigenvalues(m);
  if (values.empty()) throw Error(ErrorCode::DimensionMismatch, "empty matrix has no eigenvalues");
  return values.front();
}

}  // namespace jacobi2d
