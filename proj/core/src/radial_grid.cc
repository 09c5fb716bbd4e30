#include "steergp/radial_grid.h"

#include <cmath>
#include <string>

#include "steergp/error.h"

namespace steergp {

RadialGrid::RadialGrid(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw ShapeError("radial grid needs at least one point");
  for (std::size_t a = 0; a < values_.size(); ++a) {
    if (!std::isfinite(values_[a]) || values_[a] <= 0.0) {
      throw ShapeError("radial grid point " + std::to_string(a) +
                       " is not a positive finite number");
    }
    if (a > 0 && values_[a] <= values_[a - 1]) {
      throw ShapeError("radial grid is not strictly increasing at point " +
                       std::to_string(a));
    }
  }
}

RadialGrid RadialGrid::Uniform(std::size_t count, double p_max) {
  if (count == 0) throw ShapeError("radial grid needs at least one point");
  if (!(p_max > 0.0)) throw ShapeError("p_max must be positive");
  std::vector<double> v(count);
  for (std::size_t a = 0; a < count; ++a) {
    v[a] = p_max * static_cast<double>(a + 1) / static_cast<double>(count);
  }
  return RadialGrid(std::move(v));
}

}  // namespace steergp
