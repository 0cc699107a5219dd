#include "jacobi2d/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jacobi2d/errors.hpp"
#include "jacobi2d/fiber.hpp"

namespace jacobi2d {

namespace {

void require_anchor(const CoefficientField& field, int alpha, int beta) {
  if (alpha < 1 || alpha > field.p1() || beta < 1 || beta > field.p2()) {
    throw Error(ErrorCode::IndexOutOfRange, "(alpha, beta) = (" + std::to_string(alpha) + "," +
                                                std::to_string(beta) + ") outside the cell");
  }
}

}  // namespace

BandEnvelope band_envelope(const CoefficientField& field) {
  const ComplexMatrix j0 = assemble_J0(field).entries;
  const ComparisonDiagonal c = assemble_C(field);
  ComplexMatrix minus = j0;
  minus.add_diagonal(c.values, -1.0);
  ComplexMatrix plus = j0;
  plus.add_diagonal(c.values, +1.0);
  return BandEnvelope{hermitian_eigenvalues(minus), hermitian_eigenvalues(plus)};
}

double envelope_sum(const BandEnvelope& envelope) {
  double total = 0.0;
  for (std::size_t n = 0; n < envelope.upper.size(); ++n) total += envelope.upper[n] - envelope.lower[n];
  return total;
}

double r_value(const CoefficientField& field, int alpha, int beta) {
  require_anchor(field, alpha, beta);
  const int p1 = field.p1();
  const int p2 = field.p2();

  double column_b0 = 0.0;
  double column_a0 = 0.0;
  for (int k = 1; k <= p1; ++k) {
    column_b0 += std::abs(field.b0(alpha + k, beta));
    column_a0 += std::abs(field.a0(alpha + k, beta));
  }
  double row_a0 = 0.0;
  double row_a1 = 0.0;
  for (int k = 1; k <= p2; ++k) {
    row_a0 += std::abs(field.a0(alpha, beta + k));
    row_a1 += std::abs(field.a1(alpha, beta + k));
  }
  double r = 4.0 * column_b0;
  r += 8.0 * column_a0;
  r -= 8.0 * std::abs(field.a0(alpha, beta));
  r += 8.0 * row_a0;
  r += 4.0 * row_a1;
  return r;
}

std::vector<std::vector<double>> r_table(const CoefficientField& field) {
  std::vector<std::vector<double>> table(field.p1(), std::vector<double>(field.p2()));
  for (int alpha = 1; alpha <= field.p1(); ++alpha) {
    for (int beta = 1; beta <= field.p2(); ++beta) table[alpha - 1][beta - 1] = r_value(field, alpha, beta);
  }
  return table;
}

BoundArgmin r_min(const CoefficientField& field) {
  BoundArgmin best{1, 1, std::numeric_limits<double>::infinity()};
  for (int alpha = 1; alpha <= field.p1(); ++alpha) {
    for (int beta = 1; beta <= field.p2(); ++beta) {
      const double r = r_value(field, alpha, beta);
      if (r < best.value) best = BoundArgmin{alpha, beta, r};
    }
  }
  return best;
}

double norm_bound(const CoefficientField& field) {
  double hopping = 0.0;
  double onsite = 0.0;
  for (int n = 1; n <= field.p1(); ++n) {
    double max_a0 = 0.0, max_a1 = 0.0, max_b0 = 0.0, max_b1 = 0.0;
    for (int m = 1; m <= field.p2(); ++m) {
      max_a0 = std::max(max_a0, std::abs(field.a0(n, m)));
      max_a1 = std::max(max_a1, std::abs(field.a1(n, m)));
      max_b0 = std::max(max_b0, std::abs(field.b0(n, m)));
      max_b1 = std::max(max_b1, std::abs(field.b1(n, m)));
    }
    hopping = std::max(hopping, 8.0 * max_a0 + 4.0 * max_a1);
    onsite = std::max(onsite, 4.0 * max_b0 + 2.0 * max_b1);
  }
  return hopping + onsite;
}

double schrodinger_bound(const CoefficientField& field) {
  if (!field.has_diagonal_hopping()) {
    throw Error(ErrorCode::NotDiagonalHopping, "the diagonal-hopping estimate requires a0 == 0");
  }
  double min_column = std::numeric_limits<double>::infinity();
  for (int beta = 1; beta <= field.p2(); ++beta) {
    double s = 0.0;
    for (int n = 1; n <= field.p1(); ++n) s += std::abs(field.b0(n, beta));
    min_column = std::min(min_column, s);
  }
  double min_row = std::numeric_limits<double>::infinity();
  for (int alpha = 1; alpha <= field.p1(); ++alpha) {
    double s = 0.0;
    for (int m = 1; m <= field.p2(); ++m) s += std::abs(field.a1(alpha, m));
    min_row = std::min(min_row, s);
  }
  return 4.0 * min_column + 4.0 * min_row;
}

BoundReport make_bound_report(const CoefficientField& field, bool sharp) {
  BoundReport report;
  report.r_table = r_table(field);
  report.r_min = r_min(field);
  report.norm_bound = norm_bound(field);
  if (field.has_diagonal_hopping()) report.schrodinger_bound = schrodinger_bound(field);
  report.sharp = sharp;
  const CoefficientField target =
      sharp ? relabel(field, report.r_min.alpha, report.r_min.beta) : field;
  report.envelope_sum = envelope_sum(band_envelope(target));
  return report;
}

}  // namespace jacobi2d
