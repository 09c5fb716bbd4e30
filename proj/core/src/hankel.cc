#include "steergp/hankel.h"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <cstdlib>
#include <iterator>
#include <string>

#include "steergp/error.h"

namespace steergp {

namespace {

constexpr double kGridTolerance = 1e-9;

std::vector<double> bessel_zeros(int order, std::size_t count) {
  std::vector<double> zeros;
  zeros.reserve(count);
  boost::math::cyl_bessel_j_zero(static_cast<double>(order), 1,
                                 static_cast<unsigned>(count),
                                 std::back_inserter(zeros));
  return zeros;
}

double sign_of_order(int order) {
  return (order < 0 && (std::abs(order) % 2 == 1)) ? -1.0 : 1.0;
}

// J_{|m|}(j_k j_l / j_N) scaled by 2 / J_{|m|+1}(j_l)^2, the shared part of
// both directions (summation index l).
std::vector<double> kernel_matrix(const std::vector<double>& zeros, int nu) {
  const std::size_t count = zeros.size() - 1;
  const double j_last = zeros.back();
  std::vector<double> jp(count);
  for (std::size_t l = 0; l < count; ++l) {
    jp[l] = boost::math::cyl_bessel_j(nu + 1, zeros[l]);
  }
  std::vector<double> t(count * count);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t l = 0; l < count; ++l) {
      t[k * count + l] = 2.0 *
                         boost::math::cyl_bessel_j(nu, zeros[k] * zeros[l] / j_last) /
                         (jp[l] * jp[l]);
    }
  }
  return t;
}

void check_grid(const RadialGrid& grid, std::span<const double> expected,
                const char* which) {
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (std::abs(grid[k] - expected[k]) > kGridTolerance * expected[k]) {
      throw GridMismatchError(std::string("hankel_transform_mode: ") + which +
                              " grid point " + std::to_string(k) +
                              " is not on the Bessel-zero grid");
    }
  }
}

}  // namespace

HankelGrids hankel_grids(int order, std::size_t count, double space_limit) {
  if (count == 0) throw ShapeError("hankel_grids: count must be positive");
  if (!(space_limit > 0.0)) throw ShapeError("hankel_grids: R must be positive");
  const auto zeros = bessel_zeros(std::abs(order), count + 1);
  const double band_limit = zeros.back() / space_limit;
  std::vector<double> r(count);
  std::vector<double> p(count);
  for (std::size_t k = 0; k < count; ++k) {
    r[k] = zeros[k] / band_limit;
    p[k] = zeros[k] / space_limit;
  }
  return {RadialGrid(std::move(r)), RadialGrid(std::move(p)), space_limit,
          band_limit};
}

HankelResult hankel_transform_mode(std::span<const Complex> profile, int order,
                                   HankelDirection direction,
                                   const RadialGrid& grid) {
  const std::size_t count = grid.size();
  if (profile.size() != count) {
    throw ShapeError("hankel_transform_mode: profile has " +
                     std::to_string(profile.size()) + " samples, grid has " +
                     std::to_string(count));
  }
  const int nu = std::abs(order);
  const auto zeros = bessel_zeros(nu, count + 1);
  const double j_last = zeros.back();

  // Recover R from the first grid point, then require the whole grid to match.
  const double space_limit = direction == HankelDirection::kForward
                                 ? grid[0] * j_last / zeros[0]
                                 : zeros[0] / grid[0];
  const HankelGrids grids = hankel_grids(order, count, space_limit);
  const bool forward = direction == HankelDirection::kForward;
  check_grid(grid, (forward ? grids.space : grids.frequency).values(),
             forward ? "space" : "frequency");

  const auto t = kernel_matrix(zeros, nu);
  const double scale =
      sign_of_order(order) /
      (forward ? grids.band_limit * grids.band_limit : space_limit * space_limit);
  std::vector<Complex> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    Complex acc{};
    for (std::size_t l = 0; l < count; ++l) acc += t[k * count + l] * profile[l];
    out[k] = acc * scale;
  }
  return {forward ? grids.frequency : grids.space, std::move(out)};
}

std::vector<Complex> hankel_resample(std::span<const Complex> space_profile,
                                     int order, const RadialGrid& space_grid,
                                     std::span<const double> p) {
  const std::size_t count = space_grid.size();
  if (space_profile.size() != count) {
    throw ShapeError("hankel_resample: profile and grid sizes differ");
  }
  const int nu = std::abs(order);
  const auto zeros = bessel_zeros(nu, count + 1);
  const double space_limit = space_grid[0] * zeros.back() / zeros[0];
  const HankelGrids grids = hankel_grids(order, count, space_limit);
  check_grid(space_grid, grids.space.values(), "space");

  const double scale = sign_of_order(order) / (grids.band_limit * grids.band_limit);
  std::vector<Complex> out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    Complex acc{};
    for (std::size_t l = 0; l < count; ++l) {
      const double jp = boost::math::cyl_bessel_j(nu + 1, zeros[l]);
      acc += 2.0 * boost::math::cyl_bessel_j(nu, p[x] * grids.space[l]) /
             (jp * jp) * space_profile[l];
    }
    out[x] = acc * scale;
  }
  return out;
}

}  // namespace steergp
