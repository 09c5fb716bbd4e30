#ifndef STEERGP_SCNN_H_
#define STEERGP_SCNN_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "steergp/config.h"
#include "steergp/mode_field.h"

namespace steergp {

// Fourier-space filter of one linear layer. Only the angular mode `mode`
// (q_l) is populated; values are Omega_{ij}(p_a), row-major [i][j][a].
struct FilterLayer {
  int mode = 0;
  std::size_t out_channels = 0;
  std::size_t in_channels = 0;
  std::size_t bins = 0;
  std::vector<Complex> values;

  FilterLayer() = default;
  FilterLayer(int mode, std::size_t out_channels, std::size_t in_channels,
              std::size_t bins);

  Complex& at(std::size_t i, std::size_t j, std::size_t a) {
    return values[(i * in_channels + j) * bins + a];
  }
  const Complex& at(std::size_t i, std::size_t j, std::size_t a) const {
    return values[(i * in_channels + j) * bins + a];
  }
};

struct FilterStack {
  std::vector<FilterLayer> layers;
};

// Draws every Omega entry as an independent circularly-symmetric complex
// Gaussian with E[conj(Omega) Omega] = sigma_w^2 / (2 n^l). Entry
// (layer, i, j, a) depends only on (seed, layer, i, j, a).
FilterStack sample_filters(const NetworkConfig& config, std::uint64_t seed);

// Standard deviation of Re and Im of each layer-`layer` filter entry.
double filter_std(const NetworkConfig& config, std::size_t layer);

// The bins of entry (layer, i, j) exactly as sample_filters draws them.
void sample_filter_block(std::uint64_t seed, std::size_t layer, std::size_t i,
                         std::size_t j, double sd, std::span<Complex> out);

// Z_{i,n}(p) = sum_j conj(Omega_{ij}(p)) Y_{j,n+q}(p). Output window is the
// input window shifted by -q and the rep index advances by +q.
ModeField apply_linear(const FilterLayer& filter, const ModeField& y);

// apply_linear with the layer's filters drawn on the fly, block by block;
// identical to apply_linear(sample_filters(config, seed).layers[layer], y)
// without holding the n^{l+1} x n^l x P filter in memory.
ModeField apply_sampled_linear(const NetworkConfig& config, std::size_t layer,
                               std::uint64_t seed, const ModeField& y);

enum class CubicMethod { kNaive, kFft };

// Y_m = sum_{n,k} conj(Z_k) Z_n Z_{m+k-n} per channel and radial bin, i.e.
// the mode-space form of the pointwise conj(Z) Z Z. The output window is
// window().tripled(); nothing is truncated.
ModeField apply_cubic(const ModeField& z, CubicMethod method = CubicMethod::kFft);

// Y^0 = X;  Z^l = linear_l(Y^l);  Y^{l+1} = cubic(Z^l).
struct ForwardRecord {
  ModeField input;
  std::vector<ModeField> pre;   // Z^0 .. Z^{L-1}
  std::vector<ModeField> post;  // Y^1 .. Y^L
  std::optional<ModeField> output;  // trailing linear layer, if configured

  // Y^l for l <= L; l == L + 1 selects the trailing linear output.
  const ModeField& activation(std::size_t l) const;
};

ForwardRecord forward(const NetworkConfig& config, const FilterStack& filters,
                      const ModeField& x,
                      CubicMethod method = CubicMethod::kFft);

// forward(config, sample_filters(config, seed), x), streaming the filters.
// Used by the Monte Carlo drivers, where filters are never reused.
ForwardRecord forward_sampled(const NetworkConfig& config, std::uint64_t seed,
                              const ModeField& x,
                              CubicMethod method = CubicMethod::kFft);

// Mode windows of Y^0, Y^1, ..., including the trailing output if present.
std::vector<ModeWindow> activation_windows(const NetworkConfig& config);

// Angular count needed to run the polar pipeline without aliasing on any
// intermediate field.
std::size_t required_angular_count(const NetworkConfig& config);

// The same network evaluated pointwise on a polar grid: multiply by
// conj(Omega(p)) exp(+i q psi) for each linear layer and apply |Z|^2 Z.
// Returns the final activation. Throws BandlimitError if the grid has fewer
// than required_angular_count(config) angles.
PolarGridField polar_grid_forward(const NetworkConfig& config,
                                  const FilterStack& filters,
                                  const PolarGridField& x);

}  // namespace steergp

#endif  // STEERGP_SCNN_H_
