#ifndef STEERGP_CONFIG_H_
#define STEERGP_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "steergp/fields.h"
#include "steergp/mode_field.h"
#include "steergp/radial_grid.h"

namespace steergp {

// Network input X = synth_field(terms, grid, rep_index, widths[0], window).
struct InputSpec {
  int rep_index = 0;
  ModeWindow window;
  std::vector<FieldTerm> terms;
};

// Depth L blocks of (linear layer with filter mode q_l, cubic nonlinearity).
// With `final_linear` one more linear layer follows the last block, so
// widths has L + 2 entries and filter_modes L + 1.
struct NetworkConfig {
  std::size_t depth = 0;
  std::vector<std::size_t> widths{1};
  std::vector<int> filter_modes;
  double sigma_w_sq = 2.0;
  RadialGrid grid = RadialGrid::Uniform(1, 1.0);
  std::uint64_t seed = 0;
  InputSpec input;
  bool final_linear = false;

  std::size_t linear_layers() const { return depth + (final_linear ? 1 : 0); }

  // Throws ConfigError naming the offending key.
  void validate() const;
};

ModeField make_input(const NetworkConfig& config);

// Tolerances used by the check suite and statistical checkers.
struct Tolerances {
  double rotation = 1e-10;
  double translation = 1e-10;
  double oracle = 1e-10;
  double constraint = 1e-12;
  double cubic = 1e-12;
  double sigma_mult = 5.0;
};

struct KernelSection {
  std::size_t layer = 1;
  std::size_t draws = 100;
  bool analytic = true;
  bool empirical = true;
};

struct SweepSection {
  std::vector<std::size_t> widths;
  std::size_t draws = 100;
  std::vector<std::uint64_t> seeds;
  std::size_t layer = 1;
};

struct CheckSection {
  std::vector<double> thetas;
  Vec2 translation = {0.0, 0.0};
  std::size_t moment_draws = 100000;
  std::size_t constraint_trials = 100;
  std::size_t cubic_modes = 64;
  bool inject_two_mode_filter = false;
};

struct SampleGpSection {
  std::size_t layer = 1;
  std::size_t channels = 1;
};

struct CoordFilterTermSpec {
  RadialProfile profile;
  int m = 0;
  int n = 0;
};

struct FilterCheckSection {
  std::vector<CoordFilterTermSpec> terms;
  int rho_in_freq = 0;
  int rho_out_freq = 0;
  std::size_t trials = 100;
};

// Everything one CLI invocation reads from its config file. The network keys
// are always required; subcommand sections only when that subcommand runs.
struct RunConfig {
  NetworkConfig network;
  Tolerances tolerances;
  bool record_runtime = false;
  std::optional<KernelSection> kernel;
  std::optional<SweepSection> sweep;
  std::optional<CheckSection> check;
  std::optional<SampleGpSection> sample_gp;
  std::optional<FilterCheckSection> filter_check;
};

// Strict parser: unknown keys, missing required keys and type errors all
// throw ConfigError.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::filesystem::path& path);

// Canonical JSON of the network part; stable across runs.
std::string network_config_json(const NetworkConfig& config);
// FNV-1a of network_config_json, as 16 hex digits.
std::string config_digest(const NetworkConfig& config);

}  // namespace steergp

#endif  // STEERGP_CONFIG_H_
