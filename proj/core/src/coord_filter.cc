#include "steergp/coord_filter.h"

#include <cmath>
#include <numbers>
#include <random>

#include "steergp/rng.h"

namespace steergp {

namespace {

Mat2 rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {{{c, -s}, {s, c}}};
}

Mat2 multiply(const Mat2& x, const Mat2& y) {
  Mat2 out{};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out[r][c] = x[r][0] * y[0][c] + x[r][1] * y[1][c];
  }
  return out;
}

double polar_angle(Vec2 r) {
  if (r[0] == 0.0 && r[1] == 0.0) return 0.0;
  return std::atan2(r[1], r[0]);
}

}  // namespace

CoordFilter build_coord_filter(RadialProfile radial, int m, int n) {
  return {std::move(radial), m - n};
}

Mat2 eval_coord_filter(const CoordFilter& filter, Vec2 r) {
  const double radius = std::hypot(r[0], r[1]);
  const double amp = evaluate(filter.radial, radius);
  Mat2 m = rotation(static_cast<double>(filter.freq) * polar_angle(r));
  for (auto& row : m) {
    for (double& v : row) v *= amp;
  }
  return m;
}

Mat2 eval_coord_filter(const CompositeFilter& filter, Vec2 r) {
  Mat2 sum{};
  for (const CoordFilter& term : filter.terms) {
    const Mat2 m = eval_coord_filter(term, r);
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) sum[x][y] += m[x][y];
    }
  }
  return sum;
}

Complex apply_coord_filter(const CoordFilter& filter, Vec2 r, Complex y) {
  const double radius = std::hypot(r[0], r[1]);
  return evaluate(filter.radial, radius) *
         std::polar(1.0, static_cast<double>(filter.freq) * polar_angle(r)) * y;
}

double check_kernel_constraint(const CompositeFilter& filter, int rho_in_freq,
                               int rho_out_freq, std::size_t trials,
                               std::uint64_t seed) {
  CounterEngine engine(
      derive_key({static_cast<std::uint64_t>(Stream::kConstraint), seed}));
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> radius(0.05, 3.0);
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double theta = angle(engine);
    const double rad = radius(engine);
    const double phi = angle(engine);
    const Vec2 r{rad * std::cos(phi), rad * std::sin(phi)};
    const Vec2 gr{std::cos(theta) * r[0] - std::sin(theta) * r[1],
                  std::sin(theta) * r[0] + std::cos(theta) * r[1]};
    const Mat2 lhs = eval_coord_filter(filter, gr);
    const Mat2 rhs = multiply(
        multiply(rotation(rho_out_freq * theta), eval_coord_filter(filter, r)),
        rotation(-rho_in_freq * theta));
    double dev = 0.0;
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) dev += (lhs[x][y] - rhs[x][y]) * (lhs[x][y] - rhs[x][y]);
    }
    worst = std::max(worst, std::sqrt(dev));
  }
  return worst;
}

double check_kernel_constraint(const CoordFilter& filter, int rho_in_freq,
                               int rho_out_freq, std::size_t trials,
                               std::uint64_t seed) {
  return check_kernel_constraint(CompositeFilter{{filter}}, rho_in_freq,
                                 rho_out_freq, trials, seed);
}

}  // namespace steergp
