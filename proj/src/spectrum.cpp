#include "jacobi2d/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "jacobi2d/errors.hpp"
#include "jacobi2d/hermitian_eigen.hpp"

namespace jacobi2d {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void solve_fiber(const CoefficientField& field, const MomentumGrid& grid, int k, int l,
                 BandTable& table) {
  const SpectrumList values = hermitian_eigenvalues(assemble_J(field, grid.x(k), grid.y(l)).entries);
  std::copy(values.begin(), values.end(), table.at(k, l).begin());
}

struct SandwichSample {
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
};

SandwichSample sandwich_sample(const CoefficientField& field, const ComparisonDiagonal& c,
                               Quasimomentum q, const Tolerances& tolerances) {
  const ComplexMatrix j1 = assemble_J1(field, q.x, q.y).entries;
  ComplexMatrix c_plus_j1 = j1;
  c_plus_j1.add_diagonal(c.values, +1.0);
  ComplexMatrix c_minus_j1 = j1;
  c_minus_j1 *= -1.0;
  c_minus_j1.add_diagonal(c.values, +1.0);
  const double worst = std::min(min_eigenvalue(c_plus_j1), min_eigenvalue(c_minus_j1));
  return {worst, tolerances.psd * (1.0 + c.max_value() + max_abs_entry(j1))};
}

}  // namespace

MomentumGrid::MomentumGrid(int nx, int ny) : nx_(nx), ny_(ny) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("momentum grid sizes must be >= 1");
}

double MomentumGrid::x(int k) const noexcept { return kTwoPi * k / nx_; }
double MomentumGrid::y(int l) const noexcept { return kTwoPi * l / ny_; }

BandTable::BandTable(MomentumGrid grid, std::size_t bands)
    : grid_(grid), bands_(bands), values_(grid.points() * bands, 0.0) {}

BandTable sweep_bands(const CoefficientField& field, const MomentumGrid& grid) {
  BandTable table(grid, field.sites());
  const int nx = grid.nx();
  const int ny = grid.ny();
  const long total = static_cast<long>(nx) * ny;
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 4)
  for (long idx = 0; idx < total; ++idx) {
    try {
      solve_fiber(field, grid, static_cast<int>(idx / ny), static_cast<int>(idx % ny), table);
    } catch (...) {
#pragma omp critical(jacobi2d_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

BandTable sweep_bands_serial(const CoefficientField& field, const MomentumGrid& grid) {
  BandTable table(grid, field.sites());
  for (int k = 0; k < grid.nx(); ++k) {
    for (int l = 0; l < grid.ny(); ++l) solve_fiber(field, grid, k, l, table);
  }
  return table;
}

std::vector<Interval> band_intervals(const BandTable& table) {
  const std::size_t bands = table.bands();
  std::vector<Interval> hulls(bands, Interval{INFINITY, -INFINITY});
  for (int k = 0; k < table.grid().nx(); ++k) {
    for (int l = 0; l < table.grid().ny(); ++l) {
      const auto values = table.at(k, l);
      for (std::size_t n = 0; n < bands; ++n) {
        hulls[n].lo = std::min(hulls[n].lo, values[n]);
        hulls[n].hi = std::max(hulls[n].hi, values[n]);
      }
    }
  }
  return hulls;
}

IntervalSet spectrum_estimate(const CoefficientField& field, const MomentumGrid& grid) {
  const IntervalSet hulls = IntervalSet::from_intervals(band_intervals(sweep_bands(field, grid)));
  return hulls.close_gaps(kGapResolution * hulls.scale());
}

std::vector<Quasimomentum> sample_quasimomenta(std::size_t count, std::uint64_t seed) {
  // Raw 64-bit draws mapped to [0, 1) by hand so the samples do not depend
  // on the standard library's distribution implementation.
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Quasimomentum> out(count);
  for (auto& q : out) {
    q.x = kTwoPi * unit();
    q.y = kTwoPi * unit();
  }
  return out;
}

SandwichReport check_sandwich(const CoefficientField& field, std::size_t sample_count,
                              std::uint64_t seed, const Tolerances& tolerances) {
  return check_sandwich(field, assemble_C(field), sample_count, seed, tolerances);
}

SandwichReport check_sandwich(const CoefficientField& field, const ComparisonDiagonal& c,
                              std::size_t sample_count, std::uint64_t seed,
                              const Tolerances& tolerances) {
  if (c.values.size() != field.sites()) {
    throw Error(ErrorCode::DimensionMismatch, "comparison diagonal does not match the field");
  }
  const std::vector<Quasimomentum> qs = sample_quasimomenta(sample_count, seed);
  std::vector<SandwichSample> results(qs.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < static_cast<long>(qs.size()); ++i) {
    try {
      results[i] = sandwich_sample(field, c, qs[i], tolerances);
    } catch (...) {
#pragma omp critical(jacobi2d_sandwich_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  SandwichReport report;
  report.samples = qs.size();
  report.seed = seed;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (results[i].min_eigenvalue < -results[i].tolerance) report.pass = false;
    if (i == 0 || results[i].min_eigenvalue < report.worst_min_eigenvalue) {
      report.worst_min_eigenvalue = results[i].min_eigenvalue;
      report.worst_tolerance = results[i].tolerance;
      report.worst_at = qs[i];
    }
  }
  return report;
}

EnclosureReport check_enclosure(const BandTable& table, const BandEnvelope& envelope,
                                const Tolerances& tolerances) {
  const std::size_t bands = table.bands();
  if (envelope.lower.size() != bands || envelope.upper.size() != bands) {
    throw Error(ErrorCode::DimensionMismatch,
                "envelope has " + std::to_string(envelope.lower.size()) + "/" +
                    std::to_string(envelope.upper.size()) + " slots, table has " +
                    std::to_string(bands) + " bands");
  }
  double scale = 0.0;
  for (double v : table.values()) scale = std::max(scale, std::abs(v));
  for (double v : envelope.lower) scale = std::max(scale, std::abs(v));
  for (double v : envelope.upper) scale = std::max(scale, std::abs(v));

  EnclosureReport report;
  report.points = table.grid().points();
  report.tolerance = tolerances.enclosure * (1.0 + scale);
  report.worst_margin = INFINITY;
  for (int k = 0; k < table.grid().nx(); ++k) {
    for (int l = 0; l < table.grid().ny(); ++l) {
      const auto values = table.at(k, l);
      for (std::size_t n = 0; n < bands; ++n) {
        const double margin = std::min(values[n] - envelope.lower[n], envelope.upper[n] - values[n]);
        report.worst_margin = std::min(report.worst_margin, margin);
      }
    }
  }
  if (bands == 0) report.worst_margin = 0.0;
  report.pass = report.worst_margin >= -report.tolerance;
  return report;
}

std::string band_table_csv(const BandTable& table) {
  std::string out = "x,y,band,lambda\n";
  char line[128];
  const MomentumGrid& grid = table.grid();
  for (int k = 0; k < grid.nx(); ++k) {
    for (int l = 0; l < grid.ny(); ++l) {
      const auto values = table.at(k, l);
      for (std::size_t n = 0; n < table.bands(); ++n) {
        std::snprintf(line, sizeof line, "%.12g,%.12g,%zu,%.12g\n", grid.x(k), grid.y(l), n + 1,
                      values[n]);
        out += line;
      }
    }
  }
  return out;
}

}  // namespace jacobi2d
