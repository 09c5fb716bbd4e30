#include <boost/random/normal_distribution.hpp>

#include <cmath>

#include "steergp/rng.h"
#include "steergp/scnn.h"

namespace steergp {

FilterLayer::FilterLayer(int mode, std::size_t out_channels,
                         std::size_t in_channels, std::size_t bins)
    : mode(mode),
      out_channels(out_channels),
      in_channels(in_channels),
      bins(bins),
      values(out_channels * in_channels * bins) {}

double filter_std(const NetworkConfig& config, std::size_t layer) {
  // Re and Im each carry half of E[conj(W) W] = sigma_w^2 / (2 n^l).
  return std::sqrt(config.sigma_w_sq / (4.0 * static_cast<double>(config.widths[layer])));
}

void sample_filter_block(std::uint64_t seed, std::size_t layer, std::size_t i,
                         std::size_t j, double sd, std::span<Complex> out) {
  CounterEngine engine(
      derive_key({static_cast<std::uint64_t>(Stream::kFilter), seed, layer, i, j}));
  boost::random::normal_distribution<double> normal;
  for (Complex& v : out) {
    const double re = normal(engine);
    const double im = normal(engine);
    v = Complex(sd * re, sd * im);
  }
}

FilterStack sample_filters(const NetworkConfig& config, std::uint64_t seed) {
  config.validate();
  FilterStack stack;
  const std::size_t bins = config.grid.size();
  for (std::size_t l = 0; l < config.linear_layers(); ++l) {
    const std::size_t n_in = config.widths[l];
    const std::size_t n_out = config.widths[l + 1];
    FilterLayer layer(config.filter_modes[l], n_out, n_in, bins);
    const double sd = filter_std(config, l);
    for (std::size_t i = 0; i < n_out; ++i) {
      for (std::size_t j = 0; j < n_in; ++j) {
        sample_filter_block(seed, l, i, j, sd,
                            std::span<Complex>(&layer.at(i, j, 0), bins));
      }
    }
    stack.layers.push_back(std::move(layer));
  }
  return stack;
}

}  // namespace steergp
