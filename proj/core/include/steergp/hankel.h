#ifndef STEERGP_HANKEL_H_
#define STEERGP_HANKEL_H_

#include <cstddef>
#include <span>
#include <vector>

#include "steergp/mode_field.h"

namespace steergp {

// Order-m discrete Hankel transform on Bessel-zero sample points.
//
// With j_k the k-th positive zero of J_|m| and N = count + 1, a space limit R
// fixes the two dual grids
//
//   r_k = j_k R / j_N,   p_k = j_k / R,   k = 1..count.
//
// Forward:  F(p_l) = sum_k 2 / (W^2 J_{|m|+1}(j_k)^2) J_m(p_l r_k) f(r_k)
// Inverse:  f(r_k) = sum_l 2 / (R^2 J_{|m|+1}(j_l)^2) J_m(p_l r_k) F(p_l)
//
// where W = j_N / R is the band limit. These discretise
// F(p) = int_0^R f(r) J_m(p r) r dr and its inverse.

enum class HankelDirection { kForward, kInverse };

struct HankelGrids {
  RadialGrid space;
  RadialGrid frequency;
  double space_limit;
  double band_limit;
};

HankelGrids hankel_grids(int order, std::size_t count, double space_limit);

struct HankelResult {
  RadialGrid grid;
  std::vector<Complex> values;
};

// `grid` is the space grid for kForward and the frequency grid for kInverse;
// the result lives on the dual grid. Throws GridMismatchError if `grid` is
// not a Bessel-zero grid of order |m|.
HankelResult hankel_transform_mode(std::span<const Complex> profile, int order,
                                   HankelDirection direction,
                                   const RadialGrid& grid);

// Band-limited evaluation of the forward transform at arbitrary p, from
// samples on an order-m space grid. Used to move a profile onto a grid shared
// across orders.
std::vector<Complex> hankel_resample(std::span<const Complex> space_profile,
                                     int order, const RadialGrid& space_grid,
                                     std::span<const double> p);

}  // namespace steergp

#endif  // STEERGP_HANKEL_H_
