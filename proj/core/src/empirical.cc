#include <algorithm>
#include <cmath>
#include <string>

#include "steergp/error.h"
#include "steergp/kernel.h"
#include "steergp/parallel.h"
#include "steergp/rng.h"
#include "steergp/scnn.h"

namespace steergp {

namespace {

// Welford accumulation of complex samples; m2 collects sum |x - mean|^2.
struct RunningMoments {
  std::vector<Complex> mean;
  std::vector<double> m2;
  std::size_t count = 0;

  void add(std::span<const Complex> x) {
    if (mean.empty()) {
      mean.assign(x.size(), Complex{});
      m2.assign(x.size(), 0.0);
    }
    ++count;
    const double inv = 1.0 / static_cast<double>(count);
    for (std::size_t e = 0; e < x.size(); ++e) {
      const Complex delta = x[e] - mean[e];
      mean[e] += delta * inv;
      m2[e] += std::real(std::conj(delta) * (x[e] - mean[e]));
    }
  }
};

std::vector<KernelMatrix> run_draws(const NetworkConfig& config,
                                    const ModeField& x, std::size_t draws,
                                    std::uint64_t seed,
                                    const std::vector<std::size_t>& layers) {
  if (draws == 0) throw ShapeError("empirical kernel needs at least one draw");
  std::vector<RunningMoments> acc(layers.size());
  std::vector<KernelMatrix> shapes;

  const std::size_t chunk = std::max<std::size_t>(8, 4 * worker_count());
  std::vector<std::vector<KernelMatrix>> batch;
  for (std::size_t start = 0; start < draws; start += chunk) {
    const std::size_t count = std::min(chunk, draws - start);
    batch.assign(count, {});
    parallel_for(count, [&](std::size_t c) {
      const std::uint64_t draw_seed = derive_key(
          {static_cast<std::uint64_t>(Stream::kDraw), seed, start + c});
      const ForwardRecord rec = forward_sampled(config, draw_seed, x);
      std::vector<KernelMatrix> ks;
      ks.reserve(layers.size());
      for (std::size_t l : layers) ks.push_back(activation_kernel(rec.activation(l)));
      batch[c] = std::move(ks);
    });
    // Fixed draw order keeps the reduction independent of scheduling.
    for (std::size_t c = 0; c < count; ++c) {
      if (shapes.empty()) shapes = batch[c];
      for (std::size_t x_l = 0; x_l < layers.size(); ++x_l) {
        acc[x_l].add(batch[c][x_l].entries());
      }
    }
  }

  const KernelProvenance prov{draws, seed, config_digest(config)};
  std::vector<KernelMatrix> out;
  out.reserve(layers.size());
  for (std::size_t x_l = 0; x_l < layers.size(); ++x_l) {
    KernelMatrix k(shapes[x_l].grid(), shapes[x_l].window());
    std::ranges::copy(acc[x_l].mean, k.entries().begin());
    if (draws > 1) {
      const double denom = static_cast<double>(draws - 1) * static_cast<double>(draws);
      auto se = k.std_errs();
      for (std::size_t e = 0; e < se.size(); ++e) se[e] = std::sqrt(acc[x_l].m2[e] / denom);
    }
    k.set_provenance(prov);
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace

KernelMatrix empirical_kernel(const NetworkConfig& config, const ModeField& x,
                              std::size_t layer, std::size_t draws,
                              std::uint64_t seed) {
  if (layer > config.linear_layers()) {
    throw ShapeError("empirical_kernel: layer " + std::to_string(layer) +
                     " out of range (max " + std::to_string(config.linear_layers()) + ")");
  }
  return run_draws(config, x, draws, seed, {layer}).front();
}

std::vector<KernelMatrix> empirical_kernels(const NetworkConfig& config,
                                            const ModeField& x,
                                            std::size_t draws,
                                            std::uint64_t seed) {
  std::vector<std::size_t> layers(config.linear_layers() + 1);
  for (std::size_t l = 0; l < layers.size(); ++l) layers[l] = l;
  return run_draws(config, x, draws, seed, layers);
}

}  // namespace steergp
