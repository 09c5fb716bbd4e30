#include <boost/random/normal_distribution.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include "steergp/error.h"
#include "steergp/kernel.h"
#include "steergp/parallel.h"
#include "steergp/rng.h"

namespace steergp {

MomentEstimate moment_oracle(double gamma, int k, std::size_t draws,
                             std::uint64_t seed) {
  if (gamma < 0.0) throw ShapeError("moment_oracle: gamma must be non-negative");
  if (k < 1) throw ShapeError("moment_oracle: k must be positive");
  if (draws == 0) throw ShapeError("moment_oracle: draws must be positive");

  constexpr std::size_t kChunk = 1 << 16;
  const std::size_t chunks = (draws + kChunk - 1) / kChunk;
  struct Partial {
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t n = 0;
  };
  std::vector<Partial> parts(chunks);
  const double sd = std::sqrt(0.5 * gamma);
  parallel_for(chunks, [&](std::size_t c) {
    CounterEngine engine(
        derive_key({static_cast<std::uint64_t>(Stream::kMoment), seed, c}));
    boost::random::normal_distribution<double> normal;
    Partial p;
    const std::size_t n = std::min(kChunk, draws - c * kChunk);
    for (std::size_t d = 0; d < n; ++d) {
      const double re = sd * normal(engine);
      const double im = sd * normal(engine);
      const double v = std::pow(re * re + im * im, k);
      ++p.n;
      const double delta = v - p.mean;
      p.mean += delta / static_cast<double>(p.n);
      p.m2 += delta * (v - p.mean);
    }
    parts[c] = p;
  });

  // Chan et al. pairwise merge, in chunk order.
  Partial total;
  for (const Partial& p : parts) {
    const double n = static_cast<double>(total.n + p.n);
    const double delta = p.mean - total.mean;
    total.m2 += p.m2 + delta * delta * static_cast<double>(total.n) *
                           static_cast<double>(p.n) / n;
    total.mean += delta * static_cast<double>(p.n) / n;
    total.n += p.n;
  }

  MomentEstimate est;
  est.estimate = total.mean;
  est.std_err = draws > 1 ? std::sqrt(total.m2 / static_cast<double>(draws - 1) /
                                      static_cast<double>(draws))
                          : 0.0;
  double factorial = 1.0;
  for (int x = 2; x <= k; ++x) factorial *= x;
  est.reference = factorial * std::pow(gamma, k);
  return est;
}

ModeField gp_sample(const DiagonalKernel& k, int rep_index,
                    std::size_t channels, std::uint64_t seed,
                    std::optional<ModeWindow> window) {
  const ModeWindow win = window.value_or(ModeWindow{k.mode, k.mode});
  if (!win.contains(k.mode)) {
    throw WindowError("gp_sample: kernel mode " + std::to_string(k.mode) +
                      " outside the requested window");
  }
  ModeField out(rep_index, k.grid, channels, win);
  for (std::size_t i = 0; i < channels; ++i) {
    CounterEngine engine(
        derive_key({static_cast<std::uint64_t>(Stream::kGpSample), seed, i}));
    boost::random::normal_distribution<double> normal;
    auto row = out.row(i, k.mode);
    for (std::size_t a = 0; a < k.grid.size(); ++a) {
      const double sd = std::sqrt(0.5 * std::max(0.0, k.values[a]));
      const double re = normal(engine);
      const double im = normal(engine);
      row[a] = Complex(sd * re, sd * im);
    }
  }
  return out;
}

}  // namespace steergp
