#include "jacobi2d/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "jacobi2d/errors.hpp"
#include "jacobi2d/fiber.hpp"
#include "jacobi2d/spectrum.hpp"

namespace jacobi2d::oracle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct LabeledValue {
  double value;
  std::size_t band;  // 0-based position within its fiber
};

// Pooled fiber eigenvalues at x = 2 pi k / n2, y = 2 pi l / n1, each tagged
// with its band index, sorted by value (stable in (k, l, band) order). The
// x phase sits on the m-direction wrap, so it pairs with the n2 periods.
std::vector<LabeledValue> pooled_fiber_values(const CoefficientField& field, int n1, int n2) {
  const std::size_t bands = field.sites();
  const long fibers = static_cast<long>(n1) * n2;
  std::vector<LabeledValue> pooled(static_cast<std::size_t>(fibers) * bands);
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1)
  for (long idx = 0; idx < fibers; ++idx) {
    try {
      const double x = kTwoPi * static_cast<double>(idx / n1) / n2;
      const double y = kTwoPi * static_cast<double>(idx % n1) / n1;
      const SpectrumList values = hermitian_eigenvalues(assemble_J(field, x, y).entries);
      for (std::size_t n = 0; n < bands; ++n) pooled[idx * bands + n] = {values[n], n};
    } catch (...) {
#pragma omp critical(jacobi2d_oracle_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(pooled.begin(), pooled.end(),
                   [](const LabeledValue& a, const LabeledValue& b) { return a.value < b.value; });
  return pooled;
}

}  // namespace

TorusOperator build_torus(const CoefficientField& field, int n1, int n2, std::size_t cap) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("torus period counts must be >= 1");
  const long rows = static_cast<long>(field.p1()) * n1;
  const long cols = static_cast<long>(field.p2()) * n2;
  const std::size_t dim = static_cast<std::size_t>(rows * cols);
  if (dim > cap) {
    throw Error(ErrorCode::DimensionCap, "torus dimension " + std::to_string(dim) +
                                             " exceeds the cap " + std::to_string(cap));
  }

  TorusOperator t{n1, n2, ComplexMatrix(dim)};
  auto site = [&](long n, long m) {
    const long nn = ((n - 1) % rows + rows) % rows;
    const long mm = ((m - 1) % cols + cols) % cols;
    return static_cast<std::size_t>(nn * cols + mm);
  };
  // Every coupling is accumulated from a single value into (i, j) and its
  // conjugate into (j, i), so the result is Hermitian bit for bit.
  auto couple = [&](std::size_t i, std::size_t j, Complex v) {
    t.entries(i, j) += v;
    t.entries(j, i) += std::conj(v);
  };

  for (long n = 1; n <= rows; ++n) {
    for (long m = 1; m <= cols; ++m) {
      const int cn = static_cast<int>(n);
      const int cm = static_cast<int>(m);
      t.entries(site(n, m), site(n, m)) += field.b1(cn, cm);
      couple(site(n, m + 1), site(n, m), field.b0(cn, cm));
      couple(site(n + 1, m), site(n, m), field.a1(cn, cm));
      couple(site(n + 1, m + 1), site(n, m), field.a0(cn, cm));
      couple(site(n + 1, m), site(n, m + 1), std::conj(field.a0(cn, cm)));
    }
  }
  return t;
}

SpectrumList reference_eigenvalues(const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXcd dense(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) dense(i, j) = m(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "Eigen self-adjoint solver failed");
  }
  SpectrumList out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

DirectIntegralReport verify_direct_integral(const CoefficientField& field, int n1, int n2,
                                            double tol_rel, std::size_t cap) {
  const TorusOperator torus = build_torus(field, n1, n2, cap);
  const SpectrumList torus_values = reference_eigenvalues(torus.entries);
  const std::vector<LabeledValue> fiber_values = pooled_fiber_values(field, n1, n2);

  DirectIntegralReport report;
  report.n1 = n1;
  report.n2 = n2;
  report.dimension = torus.entries.size();
  report.tolerance = tol_rel * (1.0 + frobenius_norm(torus.entries));
  if (torus_values.size() != fiber_values.size()) {
    report.pass = false;
    report.max_abs_diff = INFINITY;
    return report;
  }
  for (std::size_t i = 0; i < torus_values.size(); ++i) {
    report.max_abs_diff = std::max(report.max_abs_diff, std::abs(torus_values[i] - fiber_values[i].value));
  }
  report.pass = report.max_abs_diff <= report.tolerance;
  return report;
}

IntervalSet brute_measure(const CoefficientField& field, int n1, int n2, std::size_t cap) {
  const TorusOperator torus = build_torus(field, n1, n2, cap);
  const SpectrumList torus_values = reference_eigenvalues(torus.entries);
  const std::vector<LabeledValue> labels = pooled_fiber_values(field, n1, n2);

  std::vector<Interval> hulls(field.sites(), Interval{INFINITY, -INFINITY});
  for (std::size_t i = 0; i < torus_values.size(); ++i) {
    Interval& h = hulls[labels[i].band];
    h.lo = std::min(h.lo, torus_values[i]);
    h.hi = std::max(h.hi, torus_values[i]);
  }
  const IntervalSet set = IntervalSet::from_intervals(std::move(hulls));
  return set.close_gaps(kGapResolution * set.scale());
}

}  // namespace jacobi2d::oracle
