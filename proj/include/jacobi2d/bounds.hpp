#pragma once

#include <optional>
#include <vector>

#include "jacobi2d/coefficients.hpp"
#include "jacobi2d/hermitian_eigen.hpp"

namespace jacobi2d {

/// Eigenvalues of J0 - C (lower) and J0 + C (upper), both ascending. Every
/// band function satisfies lower[n] <= lambda_n(x, y) <= upper[n].
struct BandEnvelope {
  SpectrumList lower;
  SpectrumList upper;
};

struct BoundArgmin {
  int alpha = 1;
  int beta = 1;
  double value = 0.0;
};

struct BoundReport {
  std::vector<std::vector<double>> r_table;  // r_table[alpha-1][beta-1]
  BoundArgmin r_min;
  double norm_bound = 0.0;
  std::optional<double> schrodinger_bound;  // only when a0 == 0
  double envelope_sum = 0.0;
  bool sharp = false;  // envelope taken on the field relabeled to r_min's argmin
};

BandEnvelope band_envelope(const CoefficientField& field);

/// Sum of upper[n] - lower[n]; by the trace identity this is 2 tr C.
double envelope_sum(const BandEnvelope& envelope);

/// Measure bound anchored at cell site (alpha, beta), both 1-based:
///   4 sum_n |b0(n,beta)| + 8 sum_n |a0(n,beta)| - 8 |a0(alpha,beta)|
///     + 8 sum_m |a0(alpha,m)| + 4 sum_m |a1(alpha,m)|.
/// Sums over n run cyclically from alpha+1 through alpha (and over m from
/// beta+1 through beta), i.e. in index order of the cell relabeled so that
/// (alpha, beta) is last. For (p1, p2) this is plain index order, and
/// r_value(relabel(f, a, b), p1, p2) == r_value(f, a, b) bit for bit.
/// Throws IndexOutOfRange.
double r_value(const CoefficientField& field, int alpha, int beta);

/// r_value for every (alpha, beta) in the cell; table[alpha-1][beta-1].
std::vector<std::vector<double>> r_table(const CoefficientField& field);

/// Minimum of r over the cell (and so over Z^2, by periodicity); ties go to
/// the smallest alpha, then the smallest beta.
BoundArgmin r_min(const CoefficientField& field);

/// Norm-based estimate 2 ||J|| majorant:
///   max_n(8 max_m |a0| + 4 max_m |a1|) + max_n(4 max_m |b0| + 2 max_m |b1|).
double norm_bound(const CoefficientField& field);

/// Estimate for diagonal hopping (a0 == 0):
///   4 min_beta sum_n |b0(n,beta)| + 4 min_alpha sum_m |a1(alpha,m)|.
/// Throws NotDiagonalHopping if any a0 entry is nonzero.
double schrodinger_bound(const CoefficientField& field);

/// All of the above. With `sharp`, the envelope is computed on
/// relabel(field, argmin) so that envelope_sum == r_min.value.
BoundReport make_bound_report(const CoefficientField& field, bool sharp = false);

}  // namespace jacobi2d
