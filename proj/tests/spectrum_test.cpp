#include <gtest/gtest.h>
#include <omp.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "jacobi2d/bounds.hpp"
#include "jacobi2d/errors.hpp"
#include "jacobi2d/spectrum.hpp"
#include "support/random_field.hpp"

namespace jacobi2d {
namespace {

using testing::random_field;

TEST(MomentumGrid, Points) {
  const MomentumGrid g(4, 2);
  EXPECT_EQ(g.points(), 8u);
  EXPECT_EQ(g.x(0), 0.0);
  EXPECT_DOUBLE_EQ(g.x(2), std::numbers::pi);
  EXPECT_DOUBLE_EQ(g.y(1), std::numbers::pi);
  EXPECT_THROW(MomentumGrid(0, 3), std::invalid_argument);
  EXPECT_THROW(MomentumGrid(3, -1), std::invalid_argument);
}

TEST(Sweep, ParallelMatchesSerialBitForBit) {
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const CoefficientField f = random_field(3 + seed, 4, seed);
      const MomentumGrid g(7, 5);
      EXPECT_EQ(sweep_bands(f, g), sweep_bands_serial(f, g)) << "threads=" << threads;
    }
  }
}

TEST(Sweep, SortedPerPoint) {
  const BandTable t = sweep_bands(random_field(3, 3, 4), MomentumGrid(5, 5));
  for (int k = 0; k < 5; ++k) {
    for (int l = 0; l < 5; ++l) {
      const auto v = t.at(k, l);
      EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
    }
  }
}

TEST(Spectrum, ShiftedSchrodingerInterval) {
  const IntervalSet s = spectrum_estimate(example_shifted_schrodinger(3, 3), MomentumGrid(64, 64));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(s.intervals()[0].lo, 2.0, 1e-12);
  EXPECT_NEAR(s.intervals()[0].hi, 14.0, 1e-12);
  EXPECT_NEAR(s.measure(), 12.0, 1e-12);
}

TEST(Spectrum, DiagonalHoppingInterval) {
  const IntervalSet s = spectrum_estimate(example_diagonal_hopping(3, 3), MomentumGrid(64, 64));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(s.intervals()[0].lo, -2.0, 1e-12);
  EXPECT_NEAR(s.intervals()[0].hi, 10.0, 1e-12);
  EXPECT_NEAR(s.measure(), 12.0, 1e-12);

  // Longer period in m spreads b1 over 0, 4, ..., 16.
  const IntervalSet wide = spectrum_estimate(example_diagonal_hopping(3, 5), MomentumGrid(16, 16));
  EXPECT_NEAR(wide.measure(), 20.0, 1e-12);
}

TEST(Spectrum, ShiftedSchrodingerIndependentOfY) {
  const BandTable t = sweep_bands(example_shifted_schrodinger(3, 3), MomentumGrid(8, 8));
  for (int k = 0; k < 8; ++k) {
    for (int l = 1; l < 8; ++l) {
      for (std::size_t n = 0; n < t.bands(); ++n) EXPECT_NEAR(t.at(k, l)[n], t.at(k, 0)[n], 1e-13);
    }
  }
}

TEST(Spectrum, DiagonalHoppingIndependentOfX) {
  const BandTable t = sweep_bands(example_diagonal_hopping(3, 3), MomentumGrid(8, 8));
  for (int k = 1; k < 8; ++k) {
    for (int l = 0; l < 8; ++l) {
      for (std::size_t n = 0; n < t.bands(); ++n) EXPECT_NEAR(t.at(k, l)[n], t.at(0, l)[n], 1e-13);
    }
  }
}

TEST(Spectrum, ConjugationSymmetryOnGridForRealCoefficients) {
  const int nx = 6;
  const int ny = 4;
  const BandTable t = sweep_bands(testing::random_real_field(3, 4, 12), MomentumGrid(nx, ny));
  for (int k = 0; k < nx; ++k) {
    for (int l = 0; l < ny; ++l) {
      const auto a = t.at(k, l);
      const auto b = t.at((nx - k) % nx, (ny - l) % ny);
      for (std::size_t n = 0; n < t.bands(); ++n) EXPECT_NEAR(a[n], b[n], 1e-12);
    }
  }
}

TEST(Spectrum, RefinementGrowsEstimate) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const CoefficientField f = random_field(3, 3 + seed % 2, 500 + seed);
    const IntervalSet coarse = spectrum_estimate(f, MomentumGrid(4, 4));
    const IntervalSet fine = spectrum_estimate(f, MomentumGrid(8, 8));
    EXPECT_TRUE(fine.contains(coarse));
    EXPECT_GE(fine.measure(), coarse.measure() - 1e-12);
  }
}

TEST(Spectrum, RelabelLeavesBandsUnchanged) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const CoefficientField f = random_field(3 + seed % 2, 3 + seed % 3, 600 + seed);
    const MomentumGrid g(5, 5);
    const BandTable base = sweep_bands(f, g);
    const BandTable moved = sweep_bands(relabel(f, 1 + seed % f.p1(), 2), g);
    for (std::size_t i = 0; i < base.values().size(); ++i) {
      EXPECT_NEAR(base.values()[i], moved.values()[i], 1e-11);
    }
  }
}

TEST(Sandwich, PassesOnRandomFields) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CoefficientField f = random_field(3 + seed % 3, 3 + seed % 4, 700 + seed);
    const SandwichReport r = check_sandwich(f, 50, seed);
    EXPECT_TRUE(r.pass) << "seed " << seed << " worst " << r.worst_min_eigenvalue;
    EXPECT_EQ(r.samples, 50u);
    EXPECT_GE(r.worst_min_eigenvalue, -r.worst_tolerance);
  }
}

TEST(Sandwich, HalfComparisonFails) {
  const CoefficientField f = example_shifted_schrodinger(3, 3);
  const SandwichReport r = check_sandwich(f, assemble_C(f).scaled(0.5), 20, 1);
  EXPECT_FALSE(r.pass);
  EXPECT_NEAR(r.worst_min_eigenvalue, -0.5, 1e-12);
}

TEST(Sandwich, SamplesAreDeterministic) {
  const auto a = sample_quasimomenta(10, 77);
  const auto b = sample_quasimomenta(10, 77);
  ASSERT_EQ(a.size(), 10u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].x, b[i].x);
    EXPECT_EQ(a[i].y, b[i].y);
    EXPECT_GE(a[i].x, 0.0);
    EXPECT_LT(a[i].x, 2.0 * std::numbers::pi);
  }
  EXPECT_NE(sample_quasimomenta(1, 78)[0].x, a[0].x);
}

TEST(Enclosure, PassesOnRandomFields) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CoefficientField f = random_field(3 + seed % 2, 3 + seed % 3, 800 + seed);
    const EnclosureReport r = check_enclosure(sweep_bands(f, MomentumGrid(6, 6)), band_envelope(f));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.points, 36u);
    EXPECT_GE(r.worst_margin, -r.tolerance);
  }
}

TEST(Enclosure, DetectsShiftedTable) {
  const CoefficientField f = random_field(3, 3, 9);
  BandEnvelope env = band_envelope(f);
  for (double& v : env.upper) v = env.lower.front() - 1.0;
  for (double& v : env.lower) v -= 2.0 + std::abs(v);
  EXPECT_FALSE(check_enclosure(sweep_bands(f, MomentumGrid(3, 3)), env).pass);

  BandEnvelope short_env = band_envelope(f);
  short_env.lower.pop_back();
  short_env.upper.pop_back();
  EXPECT_THROW(check_enclosure(sweep_bands(f, MomentumGrid(3, 3)), short_env), Error);
}

TEST(Csv, Layout) {
  const BandTable t = sweep_bands(example_shifted_schrodinger(3, 3), MomentumGrid(2, 2));
  const std::string csv = band_table_csv(t);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,y,band,lambda");
  std::getline(in, line);
  EXPECT_EQ(line, "0,0,1,3");
  std::size_t rows = 1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 4u * 9u);
  EXPECT_EQ(csv.back(), '\n');
}

}  // namespace
}  // namespace jacobi2d
