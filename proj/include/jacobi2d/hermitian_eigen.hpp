#pragma once

#include <vector>

#include "jacobi2d/dense_matrix.hpp"

namespace jacobi2d {

/// Eigenvalues with multiplicity, ascending.
using SpectrumList = std::vector<double>;

/// All eigenvalues of a Hermitian matrix.
///
/// The matrix is reduced to real symmetric tridiagonal form by complex
/// Householder reflections (the off-diagonal phases are absorbed by a
/// diagonal unitary), then diagonalized by QL iteration with implicit
/// Wilkinson shifts. The computation is sequential with a fixed operation
/// order, so identical input bits give identical output bits.
///
/// Throws Error(NonFinite) on NaN/Inf entries and Error(NotHermitian) when
/// max |M(i,j) - conj(M(j,i))| exceeds 1e-12 * max |M(i,j)|.
SpectrumList hermitian_eigenvalues(const ComplexMatrix& m);

/// First element of hermitian_eigenvalues(m).
double min_eigenvalue(const ComplexMatrix& m);

/// Eigenvalues of a real symmetric tridiagonal matrix with diagonal `diag`
/// and off-diagonal `offdiag` (offdiag[i] couples i and i+1, size n-1).
/// Returned ascending.
SpectrumList tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> offdiag);

}  // namespace jacobi2d
