#include "steergp/fields.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "steergp/error.h"
#include "test_util.h"

namespace steergp {
namespace {

using testing::RandomField;
using testing::RandomGrid;

constexpr double kPi = std::numbers::pi;

TEST(AngularDecompose, ConstantFieldHasOnlyModeZero) {
  const RadialGrid grid = RadialGrid::Uniform(3, 2.0);
  PolarGridField f(grid, 12, 1);
  const Complex c(0.7, -1.3);
  for (Complex& v : f.data()) v = c;
  const ModeField m = angular_decompose(f, {-4, 4});
  for (int n = -4; n <= 4; ++n) {
    for (std::size_t a = 0; a < 3; ++a) {
      EXPECT_LT(std::abs(m.at(0, n, a) - (n == 0 ? c : Complex{})), 1e-14);
    }
  }
}

TEST(AngularDecompose, SingleHarmonicLandsOnItsMode) {
  const RadialGrid grid = RadialGrid::Uniform(2, 1.0);
  PolarGridField f(grid, 16, 1);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 16; ++b) f.at(0, a, b) = std::polar(1.0, -2.0 * f.angle(b));
  }
  const ModeField m = angular_decompose(f, {-7, 7});
  for (int n = -7; n <= 7; ++n) {
    EXPECT_LT(std::abs(m.at(0, n, 1) - (n == 2 ? Complex(1.0) : Complex{})), 1e-12)
        << "mode " << n;
  }
}

TEST(AngularDecompose, WindowWiderThanSamplesIsRejected) {
  PolarGridField f(RadialGrid::Uniform(1, 1.0), 8, 1);
  EXPECT_THROW(angular_decompose(f, {-4, 4}), BandlimitError);
}

TEST(AngularReconstruct, ModeZeroIsConstant) {
  ModeField m(0, RadialGrid::Uniform(2, 1.0), 1, {0, 0});
  m.at(0, 0, 0) = m.at(0, 0, 1) = 1.0;
  const PolarGridField f = angular_reconstruct(m, 6);
  for (const Complex& v : f.data()) EXPECT_EQ(v, Complex(1.0));
}

TEST(AngularReconstruct, ModeOneIsNegativeHarmonic) {
  ModeField m(0, RadialGrid::Uniform(1, 1.0), 1, {1, 1});
  m.at(0, 1, 0) = 1.0;
  const PolarGridField f = angular_reconstruct(m, 8);
  for (std::size_t b = 0; b < 8; ++b) {
    EXPECT_LT(std::abs(f.at(0, 0, b) - std::polar(1.0, -f.angle(b))), 1e-15);
  }
}

TEST(AngularReconstruct, TooFewAnglesIsRejected) {
  ModeField m(0, RadialGrid::Uniform(1, 1.0), 1, {-3, 2});
  EXPECT_THROW(angular_reconstruct(m, 7), BandlimitError);
  EXPECT_NO_THROW(angular_reconstruct(m, 8));
}

// Round trip on random bandlimited data, both directions.
TEST(AngularRoundTrip, RandomBandlimitedFields) {
  for (std::uint32_t seed = 0; seed < 20; ++seed) {
    const int lo = -static_cast<int>(seed % 5) - 1;
    const ModeWindow win{lo, lo + static_cast<int>(seed % 7) + 2};
    const ModeField m = RandomField(RandomGrid(3, seed), static_cast<int>(seed % 3),
                                    2, win, seed);
    const std::size_t count = min_angular_count(win) + seed % 4;
    const PolarGridField f = angular_reconstruct(m, count);
    const ModeField back = angular_decompose(f, win, m.rep_index());
    EXPECT_LT(max_relative_deviation(back, m), 1e-12) << "seed " << seed;
    const PolarGridField again = angular_reconstruct(back, count);
    EXPECT_LT(max_relative_deviation(again, f), 1e-12) << "seed " << seed;
  }
}

TEST(RotateModeField, ZeroAngleIsIdentity) {
  const ModeField f = RandomField(RadialGrid::Uniform(3, 1.0), 2, 2, {-2, 3}, 5);
  EXPECT_EQ(rotate_mode_field(f, 0.0), f);
}

TEST(RotateModeField, QuarterTurnOfModeOne) {
  ModeField f(0, RadialGrid::Uniform(1, 1.0), 1, {1, 1});
  f.at(0, 1, 0) = 1.0;
  const ModeField r = rotate_mode_field(f, kPi / 2);
  EXPECT_LT(std::abs(r.at(0, 1, 0) - Complex(0.0, 1.0)), 1e-15);
}

TEST(RotateModeField, GroupLawAndIsometry) {
  const ModeField f = RandomField(RandomGrid(4, 9), -1, 3, {-5, 4}, 9);
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
  for (int trial = 0; trial < 25; ++trial) {
    const double t1 = angle(rng);
    const double t2 = angle(rng);
    const ModeField composed = rotate_mode_field(rotate_mode_field(f, t1), t2);
    EXPECT_LT(max_relative_deviation(composed, rotate_mode_field(f, t1 + t2)), 1e-14);
    const ModeField r = rotate_mode_field(f, t1);
    double worst = 0.0;
    for (std::size_t e = 0; e < f.data().size(); ++e) {
      const double m = std::abs(f.data()[e]);
      worst = std::max(worst, std::abs(std::abs(r.data()[e]) - m) / m);
    }
    EXPECT_LT(worst, 1e-14);
  }
}

// Rotating the mode field matches rotating the sampled function when the
// angle is a multiple of the angular step: Y'(p, psi) = e^{ik theta} Y(p, psi - theta).
TEST(RotateModeField, MatchesPolarResampling) {
  const ModeField f = RandomField(RadialGrid::Uniform(2, 1.0), 3, 1, {-3, 3}, 4);
  const std::size_t count = 16;
  const PolarGridField before = angular_reconstruct(f, count);
  for (std::size_t shift = 0; shift < count; ++shift) {
    const double theta = 2 * kPi * static_cast<double>(shift) / count;
    const PolarGridField after = angular_reconstruct(rotate_mode_field(f, theta), count);
    const Complex phase = std::polar(1.0, 3 * theta);
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        const std::size_t src = (b + count - shift) % count;
        EXPECT_LT(std::abs(after.at(0, a, b) - phase * before.at(0, a, src)), 1e-12);
      }
    }
  }
}

TEST(TranslateModeField, ZeroShiftIsIdentity) {
  const ModeField f = RandomField(RadialGrid::Uniform(3, 2.0), 0, 2, {-2, 2}, 1);
  const TranslationResult r = translate_mode_field(f, {0.0, 0.0}, 0);
  EXPECT_LT(max_relative_deviation(r.field, f), 1e-14);
  EXPECT_LT(r.truncation_residual, 1e-14);
}

// Jacobi-Anger: exp(-i p t cos(psi - phi)) = sum_m (-i)^m J_m(p t) e^{i m (psi - phi)},
// so a unit mode-0 input spreads to |J_m(p |t|)| at mode m.
TEST(TranslateModeField, ModeZeroSpreadsAsBesselFunctions) {
  const RadialGrid grid({0.5, 1.7, 3.0});
  ModeField f(0, grid, 1, {0, 0});
  for (std::size_t a = 0; a < grid.size(); ++a) f.at(0, 0, a) = 1.0;
  const Vec2 t{0.9, -1.2};
  const double tn = std::hypot(t[0], t[1]);
  const TranslationResult r = translate_mode_field(f, t, 12);
  for (std::size_t a = 0; a < grid.size(); ++a) {
    for (int m = -12; m <= 12; ++m) {
      const double expected = std::abs(std::cyl_bessel_j(std::abs(m), grid[a] * tn));
      EXPECT_NEAR(std::abs(r.field.at(0, m, a)), expected, 1e-12)
          << "bin " << a << " mode " << m;
    }
  }
}

TEST(TranslateModeField, InverseRoundTrip) {
  const RadialGrid grid = RadialGrid::Uniform(4, 4.0);
  const ModeField f = RandomField(grid, 1, 2, {-2, 2}, 3);
  const Vec2 t{1.5, 1.0};
  const double reach = grid.max() * std::hypot(t[0], t[1]);  // about 7.2
  const int margin = static_cast<int>(std::ceil(3 * reach));
  const TranslationResult there = translate_mode_field(f, t, margin);
  const TranslationResult back = translate_mode_field(there.field, {-t[0], -t[1]}, margin);
  const ModeField expected = f.rewindowed(back.field.window());
  EXPECT_LT(max_relative_deviation(back.field, expected), 1e-8);
}

TEST(TranslateModeField, NormPreservedUpToResidual) {
  const RadialGrid grid = RadialGrid::Uniform(3, 3.0);
  const ModeField f = RandomField(grid, 0, 1, {-1, 1}, 8);
  for (int margin : {0, 2, 5, 10, 20}) {
    const TranslationResult r = translate_mode_field(f, {0.8, 0.4}, margin);
    const double in = std::sqrt(f.squared_norm());
    const double out = std::sqrt(r.field.squared_norm());
    EXPECT_LE(out, in * (1 + 1e-12));
    EXPECT_LE(in - out, r.truncation_residual + 1e-12 * in) << "margin " << margin;
    const double energy_gap = f.squared_norm() - r.field.squared_norm();
    EXPECT_NEAR(energy_gap, r.truncation_residual * r.truncation_residual,
                1e-10 * f.squared_norm());
  }
}

TEST(SynthField, EmptySpecIsZero) {
  const ModeField f = synth_field({}, RadialGrid::Uniform(3, 1.0), 0, 2, {-1, 1});
  for (const Complex& v : f.data()) EXPECT_EQ(v, Complex{});
}

TEST(SynthField, ConstantTermFillsOneMode) {
  const RadialGrid grid = RadialGrid::Uniform(4, 1.0);
  const ModeField f = synth_field({{0, 0, ConstantProfile{1.0}, 1.0}}, grid, 0, 1, {-1, 1});
  for (std::size_t a = 0; a < 4; ++a) {
    EXPECT_EQ(f.at(0, 0, a), Complex(1.0));
    EXPECT_EQ(f.at(0, -1, a), Complex{});
    EXPECT_EQ(f.at(0, 1, a), Complex{});
  }
}

TEST(SynthField, OverlappingTermsAdd) {
  const RadialGrid grid = RadialGrid::Uniform(3, 2.0);
  const GaussianProfile g{2.0, 1.0, 0.5};
  const PowerDecayProfile d{1.0, 0.5, 3.0};
  const ModeField f = synth_field({{1, 2, g, Complex(0, 1)}, {1, 2, d, 1.0}}, grid, 0, 2, {0, 2});
  for (std::size_t a = 0; a < 3; ++a) {
    const Complex expected = Complex(0, 1) * evaluate(g, grid[a]) + evaluate(d, grid[a]);
    EXPECT_LT(std::abs(f.at(1, 2, a) - expected), 1e-15);
    EXPECT_EQ(f.at(0, 2, a), Complex{});
  }
}

TEST(SynthField, OutOfWindowModeIsRejected) {
  EXPECT_THROW(synth_field({{0, 3, ConstantProfile{}, 1.0}}, RadialGrid::Uniform(1, 1.0), 0,
                           1, {-2, 2}),
               WindowError);
  EXPECT_THROW(synth_field({{2, 0, ConstantProfile{}, 1.0}}, RadialGrid::Uniform(1, 1.0), 0,
                           2, {-2, 2}),
               ShapeError);
}

TEST(RadialGrid, RejectsBadGrids) {
  EXPECT_THROW(RadialGrid({}), ShapeError);
  EXPECT_THROW(RadialGrid({1.0, 1.0}), ShapeError);
  EXPECT_THROW(RadialGrid({-1.0, 1.0}), ShapeError);
  EXPECT_EQ(RadialGrid::Uniform(4, 2.0)[3], 2.0);
}

TEST(GroupElement, NormalisesAngle) {
  EXPECT_NEAR(GroupElement::Make(-kPi / 2, {}).theta, 1.5 * kPi, 1e-15);
  EXPECT_NEAR(GroupElement::Make(5 * kPi, {}).theta, kPi, 1e-14);
  EXPECT_EQ(GroupElement::Make(0.0, {1, 2}).t[1], 2.0);
}

}  // namespace
}  // namespace steergp
