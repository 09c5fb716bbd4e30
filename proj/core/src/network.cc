#include <algorithm>
#include <string>

#include "steergp/error.h"
#include "steergp/fields.h"
#include "steergp/scnn.h"

namespace steergp {

const ModeField& ForwardRecord::activation(std::size_t l) const {
  if (l == 0) return input;
  if (l <= post.size()) return post[l - 1];
  if (l == post.size() + 1 && output) return *output;
  throw ShapeError("activation: layer " + std::to_string(l) + " out of range");
}

namespace {

void check_filters(const NetworkConfig& config, const FilterStack& filters) {
  if (filters.layers.size() != config.linear_layers()) {
    throw ShapeError("forward: filter stack has " +
                     std::to_string(filters.layers.size()) + " layers, config needs " +
                     std::to_string(config.linear_layers()));
  }
  for (std::size_t l = 0; l < filters.layers.size(); ++l) {
    const FilterLayer& f = filters.layers[l];
    if (f.in_channels != config.widths[l] || f.out_channels != config.widths[l + 1] ||
        f.mode != config.filter_modes[l] || f.bins != config.grid.size()) {
      throw ShapeError("forward: filter layer " + std::to_string(l) +
                       " does not match the config");
    }
  }
}

}  // namespace

ForwardRecord forward(const NetworkConfig& config, const FilterStack& filters,
                      const ModeField& x, CubicMethod method) {
  config.validate();
  check_filters(config, filters);
  if (x.channels() != config.widths.front()) {
    throw ShapeError("forward: input has " + std::to_string(x.channels()) +
                     " channels, n^0 = " + std::to_string(config.widths.front()));
  }
  if (x.grid() != config.grid) {
    throw ShapeError("forward: input radial grid differs from the config grid");
  }
  ForwardRecord rec{x, {}, {}, std::nullopt};
  rec.pre.reserve(config.depth);
  rec.post.reserve(config.depth);
  const ModeField* y = &rec.input;
  for (std::size_t l = 0; l < config.depth; ++l) {
    rec.pre.push_back(apply_linear(filters.layers[l], *y));
    rec.post.push_back(apply_cubic(rec.pre.back(), method));
    y = &rec.post.back();
  }
  if (config.final_linear) {
    rec.output = apply_linear(filters.layers[config.depth], *y);
  }
  return rec;
}

ForwardRecord forward_sampled(const NetworkConfig& config, std::uint64_t seed,
                              const ModeField& x, CubicMethod method) {
  config.validate();
  if (x.channels() != config.widths.front()) {
    throw ShapeError("forward: input has " + std::to_string(x.channels()) +
                     " channels, n^0 = " + std::to_string(config.widths.front()));
  }
  if (x.grid() != config.grid) {
    throw ShapeError("forward: input radial grid differs from the config grid");
  }
  ForwardRecord rec{x, {}, {}, std::nullopt};
  rec.pre.reserve(config.depth);
  rec.post.reserve(config.depth);
  const ModeField* y = &rec.input;
  for (std::size_t l = 0; l < config.depth; ++l) {
    rec.pre.push_back(apply_sampled_linear(config, l, seed, *y));
    rec.post.push_back(apply_cubic(rec.pre.back(), method));
    y = &rec.post.back();
  }
  if (config.final_linear) {
    rec.output = apply_sampled_linear(config, config.depth, seed, *y);
  }
  return rec;
}

std::vector<ModeWindow> activation_windows(const NetworkConfig& config) {
  std::vector<ModeWindow> out{config.input.window};
  for (std::size_t l = 0; l < config.depth; ++l) {
    out.push_back(out.back().shifted(-config.filter_modes[l]).tripled());
  }
  if (config.final_linear) {
    out.push_back(out.back().shifted(-config.filter_modes[config.depth]));
  }
  return out;
}

std::size_t required_angular_count(const NetworkConfig& config) {
  std::size_t need = min_angular_count(config.input.window);
  ModeWindow w = config.input.window;
  for (std::size_t l = 0; l < config.linear_layers(); ++l) {
    w = w.shifted(-config.filter_modes[l]);
    need = std::max(need, min_angular_count(w));
    if (l < config.depth) {
      w = w.tripled();
      need = std::max(need, min_angular_count(w));
    }
  }
  return need;
}

namespace {

PolarGridField polar_linear(const FilterLayer& filter, const PolarGridField& y) {
  PolarGridField z(y.grid(), y.angular_count(), filter.out_channels);
  const std::size_t count = y.angular_count();
  std::vector<Complex> steer(count);
  for (std::size_t b = 0; b < count; ++b) {
    steer[b] = std::polar(1.0, static_cast<double>(filter.mode) * y.angle(b));
  }
  for (std::size_t i = 0; i < filter.out_channels; ++i) {
    for (std::size_t j = 0; j < filter.in_channels; ++j) {
      for (std::size_t a = 0; a < y.bins(); ++a) {
        const Complex w = std::conj(filter.at(i, j, a));
        for (std::size_t b = 0; b < count; ++b) {
          z.at(i, a, b) += w * steer[b] * y.at(j, a, b);
        }
      }
    }
  }
  return z;
}

void polar_cubic(PolarGridField& z) {
  for (Complex& v : z.data()) v = std::norm(v) * v;
}

}  // namespace

PolarGridField polar_grid_forward(const NetworkConfig& config,
                                  const FilterStack& filters,
                                  const PolarGridField& x) {
  config.validate();
  check_filters(config, filters);
  const std::size_t need = required_angular_count(config);
  if (x.angular_count() < need) {
    throw BandlimitError("polar_grid_forward: " + std::to_string(x.angular_count()) +
                         " angles, at least " + std::to_string(need) + " required");
  }
  if (x.channels() != config.widths.front()) {
    throw ShapeError("polar_grid_forward: input channel count differs from n^0");
  }
  PolarGridField y = x;
  for (std::size_t l = 0; l < config.depth; ++l) {
    y = polar_linear(filters.layers[l], y);
    polar_cubic(y);
  }
  if (config.final_linear) y = polar_linear(filters.layers[config.depth], y);
  return y;
}

}  // namespace steergp
