#include <algorithm>
#include <cmath>
#include <string>

#include "steergp/error.h"
#include "steergp/experiments.h"
#include "steergp/kernel.h"

namespace steergp {

namespace {

// Infinite-width kernel of activation `layer` (L + 1 = trailing linear).
DiagonalKernel analytic_at(const NetworkConfig& config, const DiagonalKernel& k0,
                           std::size_t layer) {
  if (layer <= config.depth) {
    const std::vector<int> q(config.filter_modes.begin(),
                             config.filter_modes.begin() + static_cast<long>(layer));
    return analytic_closed(k0, layer, q, config.sigma_w_sq, false);
  }
  return analytic_closed(k0, config.depth, config.filter_modes, config.sigma_w_sq, true);
}

}  // namespace

SweepResult converge_sweep(const SweepSpec& spec) {
  if (spec.widths.empty() || spec.seeds.empty()) {
    throw ShapeError("converge_sweep: widths and seeds must be non-empty");
  }
  if (spec.layer < 1 || spec.layer > spec.base.linear_layers()) {
    throw ShapeError("converge_sweep: probe layer " + std::to_string(spec.layer) +
                     " out of range");
  }
  SweepResult result;
  for (std::size_t width : spec.widths) {
    NetworkConfig config = spec.base;
    std::fill(config.widths.begin() + 1, config.widths.end(), width);
    config.validate();
    const ModeField x = make_input(config);
    const DiagonalKernel k0 = input_diagonal_kernel(x);
    const DiagonalKernel analytic = analytic_at(config, k0, spec.layer);

    std::vector<std::vector<KernelMatrix>> replicates(config.linear_layers() + 1);
    for (std::uint64_t seed : spec.seeds) {
      auto kernels = empirical_kernels(config, x, spec.draws, seed);
      const KernelMatrix& emp = kernels[spec.layer];
      if (!emp.window().contains(analytic.mode)) {
        throw WindowError("converge_sweep: analytic mode " + std::to_string(analytic.mode) +
                          " outside the empirical window");
      }
      for (std::size_t a = 0; a < config.grid.size(); ++a) {
        ResultRow row;
        row.depth = config.depth;
        row.width = width;
        row.draws = spec.draws;
        row.mode = analytic.mode;
        row.bin = a;
        row.analytic = analytic.values[a];
        row.empirical = emp.at(analytic.mode, analytic.mode, a, a).real();
        row.std_err = emp.std_err(analytic.mode, analytic.mode, a, a);
        const double diff = std::abs(row.empirical - row.analytic);
        row.rel_err = row.analytic != 0.0 ? diff / std::abs(row.analytic) : diff;
        row.seed = seed;
        result.rows.push_back(row);
      }
      for (std::size_t l = 1; l < kernels.size(); ++l) {
        replicates[l].push_back(std::move(kernels[l]));
      }
    }

    // One structural verdict per width and layer, from all replicates: a
    // single replicate of a deep narrow network is too heavy-tailed for a
    // standard-error test to resolve the surviving mode.
    for (std::size_t l = 1; l < replicates.size(); ++l) {
      const KernelMatrix pooled = pool_kernels(replicates[l]);
      const DiagonalKernel expected = analytic_at(config, k0, l);
      const SingleModeReport sm = single_mode_check(pooled, spec.sigma_mult);
      StructureFinding f;
      f.width = width;
      f.replicates = spec.seeds.size();
      f.layer = l;
      f.diagonal = diagonality_check(pooled, spec.sigma_mult).pass;
      f.single_mode = sm.pass && sm.mode == expected.mode;
      f.located_mode = sm.mode.value_or(0);
      f.expected_mode = expected.mode;
      result.structure_pass = result.structure_pass && f.diagonal && f.single_mode;
      result.structure.push_back(f);
    }
  }
  return result;
}

std::vector<double> median_rel_err(const SweepSpec& spec,
                                   const std::vector<ResultRow>& rows) {
  std::vector<double> out;
  for (std::size_t width : spec.widths) {
    std::vector<double> errs;
    for (const ResultRow& r : rows) {
      if (r.width == width) errs.push_back(r.rel_err);
    }
    if (errs.empty()) {
      out.push_back(std::nan(""));
      continue;
    }
    std::ranges::sort(errs);
    const std::size_t mid = errs.size() / 2;
    out.push_back(errs.size() % 2 == 1 ? errs[mid] : 0.5 * (errs[mid - 1] + errs[mid]));
  }
  return out;
}

}  // namespace steergp
