#ifndef STEERGP_RADIAL_GRID_H_
#define STEERGP_RADIAL_GRID_H_

#include <cstddef>
#include <span>
#include <vector>

namespace steergp {

// Strictly increasing positive radial sample points p_1 < ... < p_P.
// Kernel deltas in p are Kronecker deltas over these bins.
class RadialGrid {
 public:
  explicit RadialGrid(std::vector<double> values);

  // p_a = p_max * a / count for a = 1..count.
  static RadialGrid Uniform(std::size_t count, double p_max);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t a) const { return values_[a]; }
  std::span<const double> values() const { return values_; }
  double max() const { return values_.back(); }

  friend bool operator==(const RadialGrid&, const RadialGrid&) = default;

 private:
  std::vector<double> values_;
};

}  // namespace steergp

#endif  // STEERGP_RADIAL_GRID_H_
