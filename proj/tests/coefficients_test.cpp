#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "jacobi2d/coefficients.hpp"
#include "jacobi2d/coefficients_io.hpp"
#include "jacobi2d/errors.hpp"
#include "support/random_field.hpp"

namespace jacobi2d {
namespace {

using testing::random_field;
using testing::zero_field;

RawCoefficients zero_raw(long p1, long p2) {
  RawCoefficients raw;
  raw.p1 = p1;
  raw.p2 = p2;
  raw.a0 = raw.a1 = raw.b0 = raw.b1 =
      std::vector<std::vector<Complex>>(p1, std::vector<Complex>(p2));
  return raw;
}

ErrorCode code_of(const RawCoefficients& raw) {
  try {
    validate(raw);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "validate() accepted invalid data";
  return ErrorCode::Io;
}

TEST(Validate, AcceptsZeroField) {
  const CoefficientField f = validate(zero_raw(3, 3));
  EXPECT_EQ(f.p1(), 3);
  EXPECT_EQ(f.p2(), 3);
  EXPECT_EQ(f.sites(), 9u);
  EXPECT_TRUE(f.has_diagonal_hopping());
}

TEST(Validate, RejectsSmallPeriods) {
  EXPECT_EQ(code_of(zero_raw(2, 3)), ErrorCode::PeriodTooSmall);
  EXPECT_EQ(code_of(zero_raw(3, 2)), ErrorCode::PeriodTooSmall);
  EXPECT_EQ(code_of(zero_raw(0, 0)), ErrorCode::PeriodTooSmall);
}

TEST(Validate, RejectsShapeMismatch) {
  RawCoefficients raw = zero_raw(3, 4);
  raw.a1.pop_back();
  EXPECT_EQ(code_of(raw), ErrorCode::ShapeMismatch);

  raw = zero_raw(3, 4);
  raw.b1[2].push_back(0.0);
  EXPECT_EQ(code_of(raw), ErrorCode::ShapeMismatch);
}

TEST(Validate, RejectsComplexDiagonal) {
  RawCoefficients raw = zero_raw(3, 3);
  raw.b1[1][2] = Complex{1.0, 2.0};
  EXPECT_EQ(code_of(raw), ErrorCode::NonRealDiagonal);

  // No tolerance: the tiniest imaginary part is still an error.
  raw.b1[1][2] = Complex{1.0, 1e-300};
  EXPECT_EQ(code_of(raw), ErrorCode::NonRealDiagonal);
}

TEST(Validate, RejectsNonFinite) {
  RawCoefficients raw = zero_raw(3, 3);
  raw.a0[0][0] = Complex{std::numeric_limits<double>::quiet_NaN(), 0.0};
  EXPECT_EQ(code_of(raw), ErrorCode::NonFinite);

  raw = zero_raw(3, 3);
  raw.b0[2][1] = Complex{0.0, std::numeric_limits<double>::infinity()};
  EXPECT_EQ(code_of(raw), ErrorCode::NonFinite);

  raw = zero_raw(3, 3);
  raw.b1[0][0] = std::numeric_limits<double>::infinity();
  EXPECT_EQ(code_of(raw), ErrorCode::NonFinite);
}

TEST(Field, FlatIndexAndPeriodicAccess) {
  const CoefficientField f = random_field(3, 4, 7);
  EXPECT_EQ(f.flat(1, 1), 0u);
  EXPECT_EQ(f.flat(2, 1), 4u);
  EXPECT_EQ(f.flat(3, 4), 11u);
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 4; ++m) {
      EXPECT_EQ(f.a0(n + 3, m - 4), f.a0(n, m));
      EXPECT_EQ(f.b1(n - 6, m + 8), f.b1(n, m));
      EXPECT_EQ(f.a1_cell()[f.flat(n, m)], f.a1(n, m));
    }
  }
}

TEST(Relabel, TargetPeriodsIsIdentity) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const CoefficientField f = random_field(4, 3, seed);
    EXPECT_EQ(relabel(f, 4, 3), f);
  }
}

TEST(Relabel, MovesAnchorToLastSite) {
  const CoefficientField f = random_field(5, 4, 11);
  for (int alpha = 1; alpha <= 5; ++alpha) {
    for (int beta = 1; beta <= 4; ++beta) {
      const CoefficientField g = relabel(f, alpha, beta);
      EXPECT_EQ(g.a0(5, 4), f.a0(alpha, beta));
      EXPECT_EQ(g.b0(5, 4), f.b0(alpha, beta));
      // Shift by one in each direction wraps around the anchor.
      EXPECT_EQ(g.a1(1, 1), f.a1(alpha + 1, beta + 1));
    }
  }
}

TEST(Relabel, ShiftedSchrodingerRowsRotate) {
  const CoefficientField f = example_shifted_schrodinger(3, 3);
  const CoefficientField g = relabel(f, 1, 1);
  // Row 1 (b1 = 4) becomes row p1; the others move up by one.
  for (int m = 1; m <= 3; ++m) {
    EXPECT_EQ(g.b1(1, m), 8.0);
    EXPECT_EQ(g.b1(2, m), 12.0);
    EXPECT_EQ(g.b1(3, m), 4.0);
  }
}

TEST(Relabel, InverseShiftRestoresField) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int p1 = 3 + static_cast<int>(rng() % 4);
    const int p2 = 3 + static_cast<int>(rng() % 4);
    const int alpha = 1 + static_cast<int>(rng() % p1);
    const int beta = 1 + static_cast<int>(rng() % p2);
    const CoefficientField f = random_field(p1, p2, rng());
    // Shifting by (alpha - p1) and then by (p1 - alpha) is the identity;
    // the second anchor is 2 p1 - alpha reduced into [1, p1].
    const int back_alpha = (2 * p1 - alpha - 1) % p1 + 1;
    const int back_beta = (2 * p2 - beta - 1) % p2 + 1;
    EXPECT_EQ(relabel(relabel(f, alpha, beta), back_alpha, back_beta), f);
  }
}

TEST(Relabel, RejectsOutOfRangeAnchor) {
  const CoefficientField f = zero_field(3, 3);
  EXPECT_THROW(relabel(f, 0, 1), Error);
  EXPECT_THROW(relabel(f, 1, 4), Error);
  try {
    relabel(f, 4, 1);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
}

TEST(Examples, ShiftedSchrodinger) {
  const CoefficientField f = example_shifted_schrodinger(3, 3);
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      EXPECT_EQ(f.a0(n, m), Complex{});
      EXPECT_EQ(f.a1(n, m), Complex{});
      EXPECT_EQ(f.b0(n, m), Complex{1.0});
      EXPECT_EQ(f.b1(n, m), 4.0 * n);
    }
  }
  EXPECT_THROW(example_shifted_schrodinger(2, 5), Error);
}

TEST(Examples, DiagonalHopping) {
  const CoefficientField f = example_diagonal_hopping(3, 3);
  const double expected[] = {4.0, 8.0, 0.0};
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      EXPECT_EQ(f.a0(n, m), Complex{});
      EXPECT_EQ(f.a1(n, m), Complex{1.0});
      EXPECT_EQ(f.b0(n, m), Complex{});
      EXPECT_EQ(f.b1(n, m), expected[m - 1]);
    }
  }
  EXPECT_THROW(example_diagonal_hopping(3, 1), Error);
}

TEST(Examples, BuildersValidForManyPeriods) {
  for (int p1 = 3; p1 <= 7; ++p1) {
    for (int p2 = 3; p2 <= 7; ++p2) {
      EXPECT_NO_THROW(validate(to_raw(example_shifted_schrodinger(p1, p2))));
      EXPECT_NO_THROW(validate(to_raw(example_diagonal_hopping(p1, p2))));
    }
  }
}

TEST(Json, RoundTripIsIdentity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CoefficientField f = random_field(3 + seed % 3, 3 + seed % 4, seed);
    const std::string text = to_json(f).dump();
    EXPECT_EQ(field_from_json(nlohmann::json::parse(text)), f);
  }
}

TEST(Json, DocumentLayout) {
  const nlohmann::json doc = to_json(example_shifted_schrodinger(3, 4));
  EXPECT_EQ(doc["p1"], 3);
  EXPECT_EQ(doc["p2"], 4);
  ASSERT_EQ(doc["b0"].size(), 3u);
  ASSERT_EQ(doc["b0"][0].size(), 4u);
  EXPECT_EQ(doc["b0"][0][0], nlohmann::json::array({1.0, 0.0}));
  EXPECT_EQ(doc["b1"][2][3], 12.0);
}

TEST(Json, StructuralErrorsAreParseErrors) {
  auto parse_code = [](const char* text) {
    try {
      field_from_json(nlohmann::json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  EXPECT_EQ(parse_code(R"([1, 2])"), ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"p1": 3})"), ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"p1": 3, "p2": 3, "a0": [[[1]]], "a1": [], "b0": [], "b1": []})"),
            ErrorCode::Parse);
  // Well-formed but too small: a validation error, not a parse error.
  EXPECT_EQ(parse_code(R"({"p1": 2, "p2": 3, "a0": [], "a1": [], "b0": [], "b1": []})"),
            ErrorCode::PeriodTooSmall);
}

TEST(Json, ComplexDiagonalEntryReachesValidation) {
  nlohmann::json doc = to_json(zero_field(3, 3));
  doc["b1"][0][1] = nlohmann::json::array({1.0, 2.0});
  try {
    field_from_json(doc);
    FAIL() << "expected NonRealDiagonal";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonRealDiagonal);
  }
}

}  // namespace
}  // namespace jacobi2d
