#include <boost/random/normal_distribution.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include "steergp/coord_filter.h"
#include "steergp/error.h"
#include "steergp/experiments.h"
#include "steergp/fields.h"
#include "steergp/kernel.h"
#include "steergp/rng.h"
#include "steergp/scnn.h"

namespace steergp {

bool SuiteReport::pass() const {
  return std::ranges::all_of(items, [](const SuiteItem& i) { return i.pass; });
}

const SuiteItem& SuiteReport::item(const std::string& name) const {
  for (const SuiteItem& i : items) {
    if (i.name == name) return i;
  }
  throw Error("suite report has no item '" + name + "'");
}

SuiteOptions suite_options(const RunConfig& run) {
  SuiteOptions o;
  o.tolerances = run.tolerances;
  if (run.check) {
    o.thetas = run.check->thetas;
    o.translation = run.check->translation;
    o.moment_draws = run.check->moment_draws;
    o.constraint_trials = run.check->constraint_trials;
    o.cubic_modes = run.check->cubic_modes;
    o.inject_two_mode_filter = run.check->inject_two_mode_filter;
  }
  return o;
}

namespace {

// Dense random field on `window`: every entry a standard circular normal.
ModeField random_field(const RadialGrid& grid, int rep_index, std::size_t channels,
                       ModeWindow window, std::uint64_t key) {
  ModeField f(rep_index, grid, channels, window);
  CounterEngine engine(key);
  boost::random::normal_distribution<double> normal;
  for (Complex& v : f.data()) {
    const double re = normal(engine);
    v = Complex(re, normal(engine)) * std::sqrt(0.5);
  }
  return f;
}

std::uint64_t suite_key(std::uint64_t seed, std::uint64_t item) {
  return derive_key({static_cast<std::uint64_t>(Stream::kSuite), seed, item});
}

double rotation_deviation(const NetworkConfig& config, const FilterStack& filters,
                          const ModeField& x, double theta) {
  const ForwardRecord plain = forward(config, filters, x);
  const ForwardRecord turned = forward(config, filters, rotate_mode_field(x, theta));
  double dev = 0.0;
  for (std::size_t l = 0; l < config.depth; ++l) {
    dev = std::max(dev, max_relative_deviation(turned.pre[l],
                                               rotate_mode_field(plain.pre[l], theta)));
    dev = std::max(dev, max_relative_deviation(turned.post[l],
                                               rotate_mode_field(plain.post[l], theta)));
  }
  if (plain.output) {
    dev = std::max(dev, max_relative_deviation(*turned.output,
                                               rotate_mode_field(*plain.output, theta)));
  }
  return dev;
}

// Searches the rep index that makes one linear layer commute with rotation;
// returns the deviation at k_in + q, or infinity if another index fits better.
double rep_index_oracle(const FilterLayer& layer, const ModeField& x) {
  constexpr double kTheta = 1.0;
  const ModeField z = apply_linear(layer, x);
  const ModeField z_rot = apply_linear(layer, rotate_mode_field(x, kTheta));
  const int claimed = x.rep_index() + layer.mode;
  int best = claimed;
  double best_dev = std::numeric_limits<double>::infinity();
  double claimed_dev = best_dev;
  const int span = 8 + std::abs(layer.mode);
  for (int k = x.rep_index() - span; k <= x.rep_index() + span; ++k) {
    ModeField candidate = z;
    candidate.set_rep_index(k);
    const double dev = max_relative_deviation(z_rot, rotate_mode_field(candidate, kTheta));
    if (dev < best_dev) {
      best_dev = dev;
      best = k;
    }
    if (k == claimed) claimed_dev = dev;
  }
  return best == claimed ? claimed_dev : std::numeric_limits<double>::infinity();
}

}  // namespace

SuiteReport equivariance_suite(const NetworkConfig& config, std::uint64_t seed,
                               const SuiteOptions& options) {
  config.validate();
  const Tolerances& tol = options.tolerances;
  SuiteReport report;
  auto add = [&report](std::string name, double dev, double tolerance) {
    report.items.push_back({std::move(name), dev, tolerance, dev <= tolerance});
  };

  const FilterStack filters = sample_filters(config, seed);
  const ModeField x = random_field(config.grid, config.input.rep_index,
                                   config.widths.front(), config.input.window,
                                   suite_key(seed, 1));

  {
    double dev = 0.0;
    for (double theta : options.thetas) {
      dev = std::max(dev, rotation_deviation(config, filters, x, theta));
    }
    add("rotation_equivariance", dev, tol.rotation);
  }

  if (config.linear_layers() > 0) {
    add("rep_index_oracle", rep_index_oracle(filters.layers.front(), x), tol.rotation);
  }

  const std::size_t angles = required_angular_count(config);
  const PolarGridField xp = angular_reconstruct(x, angles);
  const PolarGridField out = polar_grid_forward(config, filters, xp);
  {
    const PolarGridField moved =
        polar_grid_forward(config, filters, translate_polar_field(xp, options.translation));
    add("translation_equivariance",
        max_relative_deviation(moved, translate_polar_field(out, options.translation)),
        tol.translation);
  }

  {
    const ForwardRecord rec = forward(config, filters, x);
    const ModeField& last = rec.activation(config.linear_layers());
    const ModeField decomposed = angular_decompose(out, last.window(), last.rep_index());
    add("oracle_agreement", max_relative_deviation(decomposed, last), tol.oracle);
  }

  {
    // Vector fields in, frequency 1 + q_l out, one filter per linear layer.
    double dev = 0.0;
    const GaussianProfile radial{1.0, 0.8, 0.5};
    for (std::size_t l = 0; l < std::max<std::size_t>(1, config.linear_layers()); ++l) {
      const int q = config.linear_layers() > 0 ? config.filter_modes[l] : 0;
      const int rho_in = 1;
      const int rho_out = 1 + q;
      CompositeFilter filter{{build_coord_filter(radial, rho_out, rho_in)}};
      if (options.inject_two_mode_filter) {
        filter.terms.push_back(build_coord_filter(radial, rho_out + 1, rho_in));
      }
      dev = std::max(dev, check_kernel_constraint(filter, rho_in, rho_out,
                                                  options.constraint_trials,
                                                  suite_key(seed, 10 + l)));
    }
    add("kernel_constraint", dev, tol.constraint);
  }

  {
    const MomentEstimate m = moment_oracle(1.0, 3, options.moment_draws, suite_key(seed, 2));
    const double z = m.std_err > 0.0 ? std::abs(m.estimate - m.reference) / m.std_err
                                     : std::numeric_limits<double>::infinity();
    add("moment_oracle", z, tol.sigma_mult);
  }

  {
    const int half = static_cast<int>(options.cubic_modes) / 2;
    const ModeWindow win{-half, -half + static_cast<int>(options.cubic_modes) - 1};
    const ModeField z = random_field(config.grid, 0, 2, win, suite_key(seed, 3));
    add("cubic_agreement",
        max_relative_deviation(apply_cubic(z, CubicMethod::kFft),
                               apply_cubic(z, CubicMethod::kNaive)),
        tol.cubic);
  }
  return report;
}

}  // namespace steergp
