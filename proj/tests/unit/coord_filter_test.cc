#include "steergp/coord_filter.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

namespace steergp {
namespace {

constexpr double kPi = std::numbers::pi;

void ExpectMatNear(const Mat2& a, const Mat2& b, double tol) {
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) EXPECT_NEAR(a[r][c], b[r][c], tol) << r << "," << c;
  }
}

TEST(CoordFilter, EqualFrequenciesGiveScaledIdentity) {
  const CoordFilter f = build_coord_filter(GaussianProfile{2.0, 0.0, 1.0}, 3, 3);
  EXPECT_EQ(f.freq, 0);
  const Vec2 r{0.6, -1.1};
  const double amp = 2.0 * std::exp(-0.5 * (0.36 + 1.21));
  ExpectMatNear(eval_coord_filter(f, r), {{{amp, 0.0}, {0.0, amp}}}, 1e-15);
}

TEST(CoordFilter, QuarterTurnBlock) {
  const CoordFilter f = build_coord_filter(ConstantProfile{1.0}, 2, 1);
  ExpectMatNear(eval_coord_filter(f, {0.0, 1.0}), {{{0.0, -1.0}, {1.0, 0.0}}}, 1e-15);
}

TEST(CoordFilter, PositiveXAxisIsIdentityTimesRadial) {
  const CoordFilter f = build_coord_filter(PowerDecayProfile{1.5, 1.0, 2.0}, 4, 1);
  const double amp = 1.5 / 9.0;
  ExpectMatNear(eval_coord_filter(f, {2.0, 0.0}), {{{amp, 0.0}, {0.0, amp}}}, 1e-15);
}

TEST(CoordFilter, FrequencyTwoAtEighthTurn) {
  const CoordFilter f{ConstantProfile{3.0}, 2};
  ExpectMatNear(eval_coord_filter(f, {1.0, 1.0}), {{{0.0, -3.0}, {3.0, 0.0}}}, 1e-15);
}

TEST(CoordFilter, DeterminantIsRadialSquared) {
  const CoordFilter f{GaussianProfile{1.7, 0.5, 0.8}, -3};
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 50; ++t) {
    const Vec2 r{u(rng), u(rng)};
    const Mat2 m = eval_coord_filter(f, r);
    const double radial = evaluate(f.radial, std::hypot(r[0], r[1]));
    EXPECT_NEAR(m[0][0] * m[1][1] - m[0][1] * m[1][0], radial * radial, 1e-14);
  }
}

TEST(CoordFilter, OriginUsesZeroAngle) {
  const CoordFilter f{ConstantProfile{2.0}, 5};
  ExpectMatNear(eval_coord_filter(f, {0.0, 0.0}), {{{2.0, 0.0}, {0.0, 2.0}}}, 0.0);
}

// The 2x2 block acting on (Re y, Im y) is complex multiplication.
TEST(CoordFilter, MatrixActionEqualsComplexMultiplication) {
  const CoordFilter f{GaussianProfile{1.2, 0.3, 0.9}, 3};
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int t = 0; t < 100; ++t) {
    const Vec2 r{u(rng), u(rng)};
    const Complex y(u(rng), u(rng));
    const Mat2 m = eval_coord_filter(f, r);
    const Complex via_matrix(m[0][0] * y.real() + m[0][1] * y.imag(),
                             m[1][0] * y.real() + m[1][1] * y.imag());
    EXPECT_LT(std::abs(via_matrix - apply_coord_filter(f, r, y)), 1e-14);
  }
}

TEST(KernelConstraint, MatchingFrequenciesSatisfyIt) {
  for (int out = -3; out <= 3; ++out) {
    for (int in = -2; in <= 2; ++in) {
      const CoordFilter f = build_coord_filter(GaussianProfile{1.0, 0.7, 0.6}, out, in);
      EXPECT_LT(check_kernel_constraint(f, in, out, 100, 9), 1e-12) << out << " " << in;
    }
  }
}

TEST(KernelConstraint, WrongFrequencyViolatesIt) {
  const CoordFilter f = build_coord_filter(ConstantProfile{1.0}, 2, 0);
  EXPECT_GT(check_kernel_constraint(f, 0, 1, 100, 9), 0.1);
}

// Two frequencies f1 != f2 dephase by (f2 - f1) theta under rotation; the
// worst case over many rotations approaches 2 sqrt(2) |R| for equal weights.
TEST(KernelConstraint, TwoFrequencySumFails) {
  const ConstantProfile unit{1.0};
  CompositeFilter f{{build_coord_filter(unit, 1, 0), build_coord_filter(unit, 2, 0)}};
  const double dev = check_kernel_constraint(f, 0, 1, 100, 4);
  EXPECT_GT(dev, 1.0);
  EXPECT_LE(dev, 2 * std::sqrt(2.0) + 1e-12);
}

TEST(KernelConstraint, ZeroFilterHasZeroDeviation) {
  const CoordFilter f{ConstantProfile{0.0}, 3};
  EXPECT_EQ(check_kernel_constraint(f, 1, 0, 100, 1), 0.0);
}

}  // namespace
}  // namespace steergp
