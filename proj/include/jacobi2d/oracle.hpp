#pragma once

#include <cstddef>

#include "jacobi2d/coefficients.hpp"
#include "jacobi2d/dense_matrix.hpp"
#include "jacobi2d/hermitian_eigen.hpp"
#include "jacobi2d/interval_set.hpp"

// Brute-force cross-checks for the fiber machinery. The operator is
// restricted to a torus of n1 x n2 periods with periodic identification;
// its spectrum then equals the pooled fiber spectra at the discrete
// momenta x = 2 pi k / n2, y = 2 pi l / n1 (x is the m-direction phase).
// Eigenvalues of the torus are computed with Eigen's self-adjoint solver,
// independently of hermitian_eigenvalues.
namespace jacobi2d::oracle {

inline constexpr std::size_t kDefaultDimensionCap = 4096;

/// The operator on (p1*n1) x (p2*n2) lattice sites. Site (n, m), 1-based,
/// has row (n-1) * (p2*n2) + (m-1). Couplings, with indices wrapped on the
/// torus and coefficients reduced into the cell:
///   (n,m)-(n,m)     b1(n,m)
///   (n,m+1)-(n,m)   b0(n,m)
///   (n+1,m)-(n,m)   a1(n,m)
///   (n+1,m+1)-(n,m) a0(n,m)
///   (n+1,m)-(n,m+1) conj(a0(n,m))
/// plus Hermitian completion. Layer n+1 couples back to layer n through
/// A_n, the layout of the fiber matrix J(x, y).
struct TorusOperator {
  int n1 = 0;
  int n2 = 0;
  ComplexMatrix entries;
};

/// Throws DimensionCap if p1*n1*p2*n2 exceeds `cap`, and
/// std::invalid_argument unless n1, n2 >= 1.
TorusOperator build_torus(const CoefficientField& field, int n1, int n2,
                          std::size_t cap = kDefaultDimensionCap);

/// Eigenvalues via Eigen::SelfAdjointEigenSolver, ascending.
SpectrumList reference_eigenvalues(const ComplexMatrix& m);

struct DirectIntegralReport {
  bool pass = false;
  double max_abs_diff = 0.0;
  double tolerance = 0.0;
  std::size_t dimension = 0;
  int n1 = 0;
  int n2 = 0;
};

/// Compares sorted torus eigenvalues with the sorted union of
/// hermitian_eigenvalues(J(2 pi k / n2, 2 pi l / n1)). Passes iff every
/// elementwise difference is <= tol_rel * (1 + ||T||_F).
DirectIntegralReport verify_direct_integral(const CoefficientField& field, int n1, int n2,
                                            double tol_rel = 1e-8,
                                            std::size_t cap = kDefaultDimensionCap);

/// Band hulls built from torus eigenvalues only. The sorted torus spectrum
/// is matched one-to-one with the sorted pooled fiber spectrum, each torus
/// eigenvalue inherits the band index of its partner, and the per-band
/// hulls are united.
IntervalSet brute_measure(const CoefficientField& field, int n1, int n2,
                          std::size_t cap = kDefaultDimensionCap);

}  // namespace jacobi2d::oracle
