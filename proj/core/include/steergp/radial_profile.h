#ifndef STEERGP_RADIAL_PROFILE_H_
#define STEERGP_RADIAL_PROFILE_H_

#include <variant>

namespace steergp {

struct ConstantProfile {
  double value = 1.0;
};

// amplitude * exp(-(r - center)^2 / (2 width^2))
struct GaussianProfile {
  double amplitude = 1.0;
  double center = 0.0;
  double width = 1.0;
};

// amplitude / (1 + r / scale)^power
struct PowerDecayProfile {
  double amplitude = 1.0;
  double scale = 1.0;
  double power = 2.0;
};

using RadialProfile =
    std::variant<ConstantProfile, GaussianProfile, PowerDecayProfile>;

double evaluate(const RadialProfile& profile, double r);

}  // namespace steergp

#endif  // STEERGP_RADIAL_PROFILE_H_
