#include <cmath>
#include <map>

#include "gtest/gtest.h"
#include "steergp/error.h"
#include "steergp/fields.h"
#include "steergp/scnn.h"
#include "test_util.h"

namespace steergp {
namespace {

FilterLayer ConstantFilter(int q, std::size_t out, std::size_t in, std::size_t bins, Complex v) {
  FilterLayer f(q, out, in, bins);
  for (Complex& w : f.values) w = v;
  return f;
}

TEST(ApplyLinear, UnitFilterShiftsModes) {
  ModeField y(0, RadialGrid::Uniform(2, 1.0), 1, {3, 3});
  const Complex v(0.4, -2.0);
  y.at(0, 3, 0) = y.at(0, 3, 1) = v;
  const ModeField z = apply_linear(ConstantFilter(1, 1, 1, 2, 1.0), y);
  EXPECT_EQ(z.window(), (ModeWindow{2, 2}));
  EXPECT_EQ(z.at(0, 2, 0), v);
  EXPECT_EQ(z.at(0, 2, 1), v);
  EXPECT_EQ(z.rep_index(), 1);
}

TEST(ApplyLinear, FilterEntersConjugated) {
  ModeField y(0, RadialGrid::Uniform(1, 1.0), 1, {2, 2});
  y.at(0, 2, 0) = 1.0;
  const ModeField z = apply_linear(ConstantFilter(1, 1, 1, 1, Complex(0, 1)), y);
  EXPECT_EQ(z.at(0, 1, 0), Complex(0, -1));
}

TEST(ApplyLinear, SumsOverInputChannels) {
  ModeField y(0, RadialGrid::Uniform(1, 1.0), 2, {0, 0});
  y.at(0, 0, 0) = 1.0;
  y.at(1, 0, 0) = Complex(0, 1);
  FilterLayer f(0, 1, 2, 1);
  f.at(0, 0, 0) = 1.0;
  f.at(0, 1, 0) = 2.0;
  EXPECT_EQ(apply_linear(f, y).at(0, 0, 0), Complex(1, 2));
}

TEST(ApplyLinear, ChannelMismatchIsRejected) {
  ModeField y(0, RadialGrid::Uniform(1, 1.0), 3, {0, 0});
  EXPECT_THROW(apply_linear(FilterLayer(0, 1, 2, 1), y), ShapeError);
}

TEST(ApplyCubic, ZeroStaysZero) {
  const ModeField z(0, RadialGrid::Uniform(2, 1.0), 2, {-2, 3});
  for (CubicMethod m : {CubicMethod::kNaive, CubicMethod::kFft}) {
    const ModeField y = apply_cubic(z, m);
    EXPECT_EQ(y.window(), (ModeWindow{-7, 8}));
    for (const Complex& v : y.data()) EXPECT_EQ(v, Complex{});
  }
}

TEST(ApplyCubic, SingleModeIsAbsSquaredTimesValue) {
  ModeField z(0, RadialGrid::Uniform(1, 1.0), 1, {2, 2});
  z.at(0, 2, 0) = Complex(1, 1);
  for (CubicMethod m : {CubicMethod::kNaive, CubicMethod::kFft}) {
    const ModeField y = apply_cubic(z, m);
    EXPECT_EQ(y.window(), (ModeWindow{2, 2}));
    EXPECT_LT(std::abs(y.at(0, 2, 0) - Complex(2, 2)), 1e-14);
  }
}

// Frozen by enumerating the triple sum by hand and cross-checked below on
// the polar grid, where the nonlinearity is pointwise conj(Z) Z Z.
TEST(ApplyCubic, TwoAdjacentModes) {
  ModeField z(0, RadialGrid::Uniform(1, 1.0), 1, {0, 1});
  z.at(0, 0, 0) = 1.0;
  z.at(0, 1, 0) = 1.0;
  const std::map<int, double> expected{{-1, 1.0}, {0, 3.0}, {1, 3.0}, {2, 1.0}};
  for (CubicMethod m : {CubicMethod::kNaive, CubicMethod::kFft}) {
    const ModeField y = apply_cubic(z, m);
    EXPECT_EQ(y.window(), (ModeWindow{-1, 2}));
    for (const auto& [mode, value] : expected) {
      EXPECT_LT(std::abs(y.at(0, mode, 0) - value), 1e-14) << "mode " << mode;
    }
  }
}

TEST(ApplyCubic, MatchesPointwiseProductOnPolarGrid) {
  for (std::uint32_t seed = 0; seed < 10; ++seed) {
    const ModeWindow win{-static_cast<int>(seed % 4), static_cast<int>(seed % 5) + 1};
    const ModeField z = testing::RandomField(RadialGrid::Uniform(2, 1.0), 0, 2, win, seed);
    const ModeField y = apply_cubic(z);
    const std::size_t count = min_angular_count(y.window());
    PolarGridField p = angular_reconstruct(z, count);
    for (Complex& v : p.data()) v = std::norm(v) * v;
    EXPECT_LT(max_relative_deviation(angular_decompose(p, y.window()), y), 1e-12);
  }
}

TEST(ApplyCubic, NaiveAndFftAgreeUpTo64Modes) {
  for (int width : {1, 2, 3, 7, 16, 33, 64}) {
    const ModeWindow win{-width / 2, -width / 2 + width - 1};
    const ModeField z = testing::RandomField(testing::RandomGrid(3, width), 1, 2, win, width);
    const ModeField a = apply_cubic(z, CubicMethod::kNaive);
    const ModeField b = apply_cubic(z, CubicMethod::kFft);
    EXPECT_EQ(a.window(), win.tripled());
    EXPECT_EQ(b.rep_index(), 1);
    EXPECT_LT(max_relative_deviation(b, a), 1e-12) << "width " << width;
  }
}

// Support tripling: a field living on a sub-window of its declared window
// produces exact zeros outside the tripled sub-window.
TEST(ApplyCubic, NoSupportOutsideTripledWindow) {
  ModeField z(0, RadialGrid::Uniform(1, 1.0), 1, {-3, 3});
  z.at(0, 1, 0) = Complex(0.5, 1.0);
  z.at(0, 2, 0) = Complex(-1.0, 0.25);
  const ModeField y = apply_cubic(z, CubicMethod::kNaive);
  for (int m = y.window().lo; m <= y.window().hi; ++m) {
    if (m < 0 || m > 3) EXPECT_EQ(y.at(0, m, 0), Complex{}) << "mode " << m;
  }
}

}  // namespace
}  // namespace steergp
