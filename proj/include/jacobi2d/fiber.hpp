#pragma once

#include <optional>
#include <vector>

#include "jacobi2d/coefficients.hpp"
#include "jacobi2d/dense_matrix.hpp"

namespace jacobi2d {

struct Quasimomentum {
  double x = 0.0;
  double y = 0.0;
};

/// Dense Hermitian matrix of size p1*p2 in the block order of the cell
/// (block n holds rows (n-1)*p2 ... n*p2 - 1). Hermitian exactly: every
/// off-diagonal pair is written from a single source value.
struct FiberMatrix {
  ComplexMatrix entries;
  std::optional<Quasimomentum> quasimomentum;  // empty for J0
};

/// Diagonal of the comparison matrix C in flat block order. Nonnegative,
/// independent of quasimomentum.
struct ComparisonDiagonal {
  std::vector<double> values;

  double trace() const noexcept;
  double max_value() const noexcept;
  ComparisonDiagonal scaled(double s) const;
};

/// Bloch form of A_n on the m-direction, p2 x p2 (not Hermitian in general):
/// diagonal a1(n,m); (m+1,m) = a0(n,m); (m,m+1) = conj(a0(n,m));
/// (1,p2) = e^{ix} a0(n,p2); (p2,1) = e^{-ix} conj(a0(n,p2)).
/// Throws IndexOutOfRange unless 1 <= n <= p1.
ComplexMatrix assemble_A_hat(const CoefficientField& field, int n, double x);

/// Same band pattern as assemble_A_hat with (b0, b1); exactly Hermitian.
ComplexMatrix assemble_B_hat(const CoefficientField& field, int n, double x);

/// Full fiber J(x, y): diagonal blocks B_hat(n), block (n+1, n) = A_hat(n),
/// block (n, n+1) = A_hat(n)^*, block (1, p1) = e^{iy} A_hat(p1) and
/// block (p1, 1) = e^{-iy} A_hat(p1)^*.
FiberMatrix assemble_J(const CoefficientField& field, double x, double y);

/// J with every corner entry removed: the (1,p2)/(p2,1) entries of every
/// A_hat and B_hat block, and the two corner blocks. Independent of (x, y).
FiberMatrix assemble_J0(const CoefficientField& field);

/// J(x, y) - J0, computed entrywise (so J0 + J1 == J exactly).
FiberMatrix assemble_J1(const CoefficientField& field, double x, double y);

/// Comparison diagonal dominating J1 from both sides (-C <= J1 <= C).
ComparisonDiagonal assemble_C(const CoefficientField& field);

}  // namespace jacobi2d
