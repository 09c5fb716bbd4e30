#include <cmath>
#include <string>

#include "steergp/error.h"
#include "steergp/kernel.h"

namespace steergp {

DiagonalKernel analytic_step(const DiagonalKernel& k_prev, double sigma_w_sq,
                             int q) {
  // E|Z|^6 = 3! gamma^3 for a circular complex normal with E|Z|^2 = gamma.
  const double half = 0.5 * sigma_w_sq;
  const double factor = 6.0 * half * half * half;
  DiagonalKernel out{k_prev.grid, k_prev.mode - q, k_prev.values};
  for (double& v : out.values) v = factor * v * v * v;
  return out;
}

DiagonalKernel analytic_linear_step(const DiagonalKernel& k_prev,
                                    double sigma_w_sq, int q) {
  DiagonalKernel out{k_prev.grid, k_prev.mode - q, k_prev.values};
  for (double& v : out.values) v *= 0.5 * sigma_w_sq;
  return out;
}

namespace {

void check_q_list(std::size_t depth, const std::vector<int>& q_list,
                  bool final_linear) {
  const std::size_t expected = depth + (final_linear ? 1 : 0);
  if (q_list.size() != expected) {
    throw ShapeError("analytic kernel: q list has " + std::to_string(q_list.size()) +
                     " entries, expected " + std::to_string(expected));
  }
}

}  // namespace

DiagonalKernel analytic_closed(const DiagonalKernel& k0, std::size_t depth,
                               const std::vector<int>& q_list,
                               double sigma_w_sq, bool final_linear) {
  check_q_list(depth, q_list, final_linear);
  double power = 1.0;  // 3^L
  for (std::size_t l = 0; l < depth; ++l) power *= 3.0;
  const double half = 0.5 * sigma_w_sq;
  const double prefactor = std::pow(6.0 * half * half * half, (power - 1.0) / 2.0);
  int shift = 0;
  for (int q : q_list) shift += q;
  DiagonalKernel out{k0.grid, k0.mode - shift, k0.values};
  for (double& v : out.values) {
    v = prefactor * std::pow(v, power);
    if (final_linear) v *= half;
  }
  return out;
}

DiagonalKernel analytic_iterated(const DiagonalKernel& k0, std::size_t depth,
                                 const std::vector<int>& q_list,
                                 double sigma_w_sq, bool final_linear) {
  check_q_list(depth, q_list, final_linear);
  DiagonalKernel k = k0;
  for (std::size_t l = 0; l < depth; ++l) k = analytic_step(k, sigma_w_sq, q_list[l]);
  if (final_linear) k = analytic_linear_step(k, sigma_w_sq, q_list[depth]);
  return k;
}

}  // namespace steergp
