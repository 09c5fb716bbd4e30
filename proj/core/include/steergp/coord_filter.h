#ifndef STEERGP_COORD_FILTER_H_
#define STEERGP_COORD_FILTER_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "steergp/fields.h"
#include "steergp/mode_field.h"
#include "steergp/radial_profile.h"

namespace steergp {

using Mat2 = std::array<std::array<double, 2>, 2>;

// Coordinate-space steerable filter R(r) * rotation(freq * phi).
struct CoordFilter {
  RadialProfile radial;
  int freq = 0;
};

// A sum of single-frequency filters. A sum with more than one distinct
// frequency does not satisfy the kernel constraint.
struct CompositeFilter {
  std::vector<CoordFilter> terms;
};

// Filter intertwining input irrep frequency n with output frequency m.
CoordFilter build_coord_filter(RadialProfile radial, int m, int n);

// At the origin phi is taken to be 0.
Mat2 eval_coord_filter(const CoordFilter& filter, Vec2 r);
Mat2 eval_coord_filter(const CompositeFilter& filter, Vec2 r);

// Same action written as a complex multiplication: R(r) exp(i freq phi) y.
Complex apply_coord_filter(const CoordFilter& filter, Vec2 r, Complex y);

// Largest Frobenius-norm deviation of
//   w(g r) - rho_out(g) w(r) rho_in(g^-1)
// over `trials` random rotations and points, rho(g_theta) being the rotation
// by freq * theta.
double check_kernel_constraint(const CompositeFilter& filter, int rho_in_freq,
                               int rho_out_freq, std::size_t trials,
                               std::uint64_t seed);
double check_kernel_constraint(const CoordFilter& filter, int rho_in_freq,
                               int rho_out_freq, std::size_t trials,
                               std::uint64_t seed);

}  // namespace steergp

#endif  // STEERGP_COORD_FILTER_H_
