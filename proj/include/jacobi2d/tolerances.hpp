#pragma once

namespace jacobi2d {

/// Relative tolerance factors for every numerical check. Each check
/// multiplies its factor by a check-specific scale, documented where the
/// check is declared. The CLI can override psd and enclosure.
struct Tolerances {
  double psd = 1e-10;              // diag(C) -+ J1 >= -psd * scale
  double enclosure = 1e-9;         // lambda_n(x,y) within envelope slot n
  double direct_integral = 1e-8;   // torus vs pooled fiber eigenvalues
  double bound_chain = 1e-6;       // grid measure vs the analytic bounds
  double trace_identity = 1e-9;    // envelope_sum == 2 tr C == r(p1, p2)
};

}  // namespace jacobi2d
