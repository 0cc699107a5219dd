#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jacobi2d/bounds.hpp"
#include "jacobi2d/coefficients.hpp"
#include "jacobi2d/fiber.hpp"
#include "jacobi2d/interval_set.hpp"
#include "jacobi2d/tolerances.hpp"

namespace jacobi2d {

/// Uniform sampling of the quasimomentum torus: x_k = 2 pi k / nx,
/// y_l = 2 pi l / ny, k < nx, l < ny. The endpoint 2 pi is excluded.
class MomentumGrid {
 public:
  /// Throws std::invalid_argument unless nx, ny >= 1.
  MomentumGrid(int nx, int ny);

  int nx() const noexcept { return nx_; }
  int ny() const noexcept { return ny_; }
  std::size_t points() const noexcept { return static_cast<std::size_t>(nx_) * ny_; }

  double x(int k) const noexcept;
  double y(int l) const noexcept;

 private:
  int nx_;
  int ny_;
};

/// lambda_n(x_k, y_l) for every grid point, ascending in n. Stored in
/// (k, l, n) order.
class BandTable {
 public:
  BandTable(MomentumGrid grid, std::size_t bands);

  const MomentumGrid& grid() const noexcept { return grid_; }
  std::size_t bands() const noexcept { return bands_; }

  std::span<double> at(int k, int l) noexcept { return {values_.data() + offset(k, l), bands_}; }
  std::span<const double> at(int k, int l) const noexcept {
    return {values_.data() + offset(k, l), bands_};
  }
  std::span<const double> values() const noexcept { return values_; }

  bool operator==(const BandTable& other) const noexcept { return values_ == other.values_; }

 private:
  std::size_t offset(int k, int l) const noexcept {
    return (static_cast<std::size_t>(k) * grid_.ny() + static_cast<std::size_t>(l)) * bands_;
  }

  MomentumGrid grid_;
  std::size_t bands_;
  std::vector<double> values_;
};

/// Eigenvalues of J(x_k, y_l) at every grid point. Fibers are solved in
/// parallel (OpenMP) and written to fixed slots, so the result is bit
/// identical to sweep_bands_serial for any thread count.
BandTable sweep_bands(const CoefficientField& field, const MomentumGrid& grid);

/// Single-threaded reference for sweep_bands.
BandTable sweep_bands_serial(const CoefficientField& field, const MomentumGrid& grid);

/// Per band n: [min over grid, max over grid] of lambda_n.
std::vector<Interval> band_intervals(const BandTable& table);

/// Gaps narrower than this times IntervalSet::scale() are below the
/// eigensolver's resolution and are closed in spectrum estimates.
inline constexpr double kGapResolution = 1e-12;

/// Union of the band hulls of sweep_bands(field, grid), with unresolvable
/// gaps closed (see kGapResolution). Converges to the spectrum from inside
/// as the grid is refined.
IntervalSet spectrum_estimate(const CoefficientField& field, const MomentumGrid& grid);

struct SandwichReport {
  bool pass = true;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double worst_min_eigenvalue = 0.0;  // min over samples of both lambda_min(C -+ J1)
  double worst_tolerance = 0.0;       // tolerance in force at that sample
  Quasimomentum worst_at;
};

/// Checks -C <= J1(x, y) <= C at `sample_count` pseudo-random quasimomenta
/// drawn from a generator seeded with `seed`. A sample passes when both
/// lambda_min(C - J1) and lambda_min(C + J1) are >= -tol with
/// tol = tolerances.psd * (1 + max C + max |J1(i,j)|).
SandwichReport check_sandwich(const CoefficientField& field, std::size_t sample_count,
                              std::uint64_t seed, const Tolerances& tolerances = {});

/// Same check against an explicitly supplied comparison diagonal.
SandwichReport check_sandwich(const CoefficientField& field, const ComparisonDiagonal& c,
                              std::size_t sample_count, std::uint64_t seed,
                              const Tolerances& tolerances = {});

/// Deterministic quasimomentum samples used by check_sandwich.
std::vector<Quasimomentum> sample_quasimomenta(std::size_t count, std::uint64_t seed);

struct EnclosureReport {
  bool pass = true;
  std::size_t points = 0;
  /// min over (k, l, n) of min(lambda - lower[n], upper[n] - lambda);
  /// negative means a value left its envelope slot.
  double worst_margin = 0.0;
  double tolerance = 0.0;
};

/// Passes iff every table value lies in [lower[n] - tol, upper[n] + tol],
/// tol = tolerances.enclosure * (1 + max |value|) over table and envelope.
/// Throws DimensionMismatch if the band counts differ.
EnclosureReport check_enclosure(const BandTable& table, const BandEnvelope& envelope,
                                const Tolerances& tolerances = {});

/// CSV export: header "x,y,band,lambda", one row per (k, l, n) in
/// lexicographic order, band 1-based, numbers with 12 significant digits.
std::string band_table_csv(const BandTable& table);

}  // namespace jacobi2d
