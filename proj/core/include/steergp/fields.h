#ifndef STEERGP_FIELDS_H_
#define STEERGP_FIELDS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "steergp/mode_field.h"
#include "steergp/radial_profile.h"

namespace steergp {

using Vec2 = std::array<double, 2>;

// Element (t, theta) of SE(2); theta is kept in [0, 2 pi).
struct GroupElement {
  double theta = 0.0;
  Vec2 t = {0.0, 0.0};

  static GroupElement Make(double theta, Vec2 t);
};

// Smallest angular sample count that represents every mode of `window`
// without aliasing: 2 max|n| + 2.
std::size_t min_angular_count(ModeWindow window);

// Angular analysis F_m(p_a) = (1/A) sum_b f(p_a, psi_b) exp(+i m psi_b).
// Throws BandlimitError if the window is wider than A.
ModeField angular_decompose(const PolarGridField& f, ModeWindow window,
                            int rep_index = 0);

// Angular synthesis f(p_a, psi_b) = sum_m F_m(p_a) exp(-i m psi_b).
// Throws BandlimitError if A < min_angular_count(f.window()).
PolarGridField angular_reconstruct(const ModeField& f,
                                   std::size_t angular_count);

// Exact action of a rotation on the mode representation:
// F_n -> exp(i (k + n) theta) F_n, k the field's rep index.
ModeField rotate_mode_field(const ModeField& f, double theta);

// Pointwise multiplication by exp(-i t . p) on the polar grid.
PolarGridField translate_polar_field(const PolarGridField& f, Vec2 t);

struct TranslationResult {
  ModeField field;
  // L2 norm of the Jacobi-Anger tail that fell outside the widened window.
  double truncation_residual = 0.0;
};

// Translation phase exp(-i t . p) applied in mode space. The output window is
// the input window widened by `mode_margin` on both sides.
TranslationResult translate_mode_field(const ModeField& f, Vec2 t,
                                       int mode_margin);

// One nonzero contribution to a synthesized test field.
struct FieldTerm {
  std::size_t channel = 0;
  int mode = 0;
  RadialProfile profile = ConstantProfile{};
  Complex amplitude = 1.0;
};

// Deterministic field with the listed terms summed into a zero field.
// Throws WindowError for modes outside `window` and ShapeError for channels
// out of range.
ModeField synth_field(const std::vector<FieldTerm>& terms,
                      const RadialGrid& grid, int rep_index,
                      std::size_t channels, ModeWindow window);

}  // namespace steergp

#endif  // STEERGP_FIELDS_H_
