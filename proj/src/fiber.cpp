#include "jacobi2d/fiber.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jacobi2d/errors.hpp"

namespace jacobi2d {

namespace {

void require_layer(const CoefficientField& field, int n) {
  if (n < 1 || n > field.p1()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "layer n=" + std::to_string(n) + " outside [1," + std::to_string(field.p1()) + "]");
  }
}

// Which corner terms to include. J0 drops both kinds.
struct Corners {
  bool enabled = true;
  Complex phase_x{1.0, 0.0};
  Complex phase_y{1.0, 0.0};
};

// The Bloch band pattern shared by A_hat and B_hat, written into `out` at
// (row0 + i, col0 + j). `offdiag(m)` is the coupling between m and m+1 of
// layer n, `diag(m)` the on-site term.
template <typename OffDiag, typename Diag, typename Sink>
void write_band(int p2, OffDiag offdiag, Diag diag, const Corners& corners, Sink sink) {
  for (int m = 1; m <= p2; ++m) sink(m, m, diag(m));
  for (int m = 1; m < p2; ++m) {
    const Complex v = offdiag(m);
    sink(m + 1, m, v);
    sink(m, m + 1, std::conj(v));
  }
  if (corners.enabled) {
    const Complex v = corners.phase_x * offdiag(p2);
    sink(1, p2, v);
    sink(p2, 1, std::conj(v));
  }
}

ComplexMatrix a_hat(const CoefficientField& field, int n, const Corners& corners) {
  const int p2 = field.p2();
  ComplexMatrix out(p2);
  write_band(
      p2, [&](int m) { return field.a0(n, m); }, [&](int m) { return field.a1(n, m); }, corners,
      [&](int i, int j, Complex v) { out(i - 1, j - 1) = v; });
  return out;
}

ComplexMatrix b_hat(const CoefficientField& field, int n, const Corners& corners) {
  const int p2 = field.p2();
  ComplexMatrix out(p2);
  write_band(
      p2, [&](int m) { return field.b0(n, m); }, [&](int m) { return Complex{field.b1(n, m)}; },
      corners, [&](int i, int j, Complex v) { out(i - 1, j - 1) = v; });
  return out;
}

ComplexMatrix assemble(const CoefficientField& field, const Corners& corners) {
  const int p1 = field.p1();
  const std::size_t p2 = static_cast<std::size_t>(field.p2());
  ComplexMatrix j(field.sites());
  auto block = [&](int n) { return static_cast<std::size_t>(n - 1) * p2; };

  for (int n = 1; n <= p1; ++n) {
    const ComplexMatrix b = b_hat(field, n, corners);
    const std::size_t o = block(n);
    for (std::size_t r = 0; r < p2; ++r) {
      for (std::size_t c = r; c < p2; ++c) j.set_hermitian_pair(o + r, o + c, b(r, c));
    }
  }
  // Block (n+1, n) carries A_hat(n); its adjoint lands in (n, n+1).
  for (int n = 1; n < p1; ++n) {
    const ComplexMatrix a = a_hat(field, n, corners);
    const std::size_t lower = block(n + 1);
    const std::size_t upper = block(n);
    for (std::size_t r = 0; r < p2; ++r) {
      for (std::size_t c = 0; c < p2; ++c) {
        if (a(r, c) != Complex{}) j.set_hermitian_pair(lower + r, upper + c, a(r, c));
      }
    }
  }
  if (corners.enabled) {
    const ComplexMatrix a = a_hat(field, p1, corners);
    const std::size_t first = block(1);
    const std::size_t last = block(p1);
    for (std::size_t r = 0; r < p2; ++r) {
      for (std::size_t c = 0; c < p2; ++c) {
        if (a(r, c) != Complex{}) j.set_hermitian_pair(first + r, last + c, corners.phase_y * a(r, c));
      }
    }
  }
  return j;
}

Corners with_phases(double x, double y) {
  return Corners{true, std::polar(1.0, x), std::polar(1.0, y)};
}

}  // namespace

double ComparisonDiagonal::trace() const noexcept {
  double t = 0.0;
  for (double v : values) t += v;
  return t;
}

double ComparisonDiagonal::max_value() const noexcept {
  return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

ComparisonDiagonal ComparisonDiagonal::scaled(double s) const {
  ComparisonDiagonal out = *this;
  for (double& v : out.values) v *= s;
  return out;
}

ComplexMatrix assemble_A_hat(const CoefficientField& field, int n, double x) {
  require_layer(field, n);
  return a_hat(field, n, with_phases(x, 0.0));
}

ComplexMatrix assemble_B_hat(const CoefficientField& field, int n, double x) {
  require_layer(field, n);
  return b_hat(field, n, with_phases(x, 0.0));
}

FiberMatrix assemble_J(const CoefficientField& field, double x, double y) {
  return FiberMatrix{assemble(field, with_phases(x, y)), Quasimomentum{x, y}};
}

FiberMatrix assemble_J0(const CoefficientField& field) {
  return FiberMatrix{assemble(field, Corners{false}), std::nullopt};
}

FiberMatrix assemble_J1(const CoefficientField& field, double x, double y) {
  FiberMatrix j = assemble_J(field, x, y);
  j.entries -= assemble_J0(field).entries;
  return j;
}

ComparisonDiagonal assemble_C(const CoefficientField& field) {
  const int p1 = field.p1();
  const int p2 = field.p2();
  ComparisonDiagonal c;
  c.values.assign(field.sites(), 0.0);

  // D collects everything the corner block e^{iy} A_hat(p1) contributes;
  // it sits on both block 1 and block p1. The last term is |a0(p1, m-1)|
  // with m-1 taken cyclically.
  std::vector<double> d(p2);
  for (int m = 1; m <= p2; ++m) {
    d[m - 1] = std::abs(field.a1(p1, m)) + std::abs(field.a0(p1, m)) + std::abs(field.a0(p1, m - 1));
  }

  for (int n = 1; n <= p1; ++n) {
    double end = std::abs(field.b0(n, p2));
    if (n < p1) end += std::abs(field.a0(n, p2));
    if (n > 1) end += std::abs(field.a0(n - 1, p2));
    c.values[field.flat(n, 1)] += end;
    c.values[field.flat(n, p2)] += end;
  }
  for (int n : {1, p1}) {
    for (int m = 1; m <= p2; ++m) c.values[field.flat(n, m)] += d[m - 1];
  }
  return c;
}

}  // namespace jacobi2d
