#ifndef STEERGP_EXPERIMENTS_H_
#define STEERGP_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "steergp/config.h"

namespace steergp {

// Width sweep of the empirical kernel against the infinite-width closed form.
// Each width w replaces every hidden multiplicity n^1..n^L (n^0 is kept).
struct SweepSpec {
  NetworkConfig base;
  std::vector<std::size_t> widths;
  std::size_t draws = 1;
  std::vector<std::uint64_t> seeds;
  std::size_t layer = 1;
  double sigma_mult = 5.0;
};

struct ResultRow {
  std::size_t depth = 0;
  std::size_t width = 0;
  std::size_t draws = 0;
  int mode = 0;
  std::size_t bin = 0;
  double analytic = 0.0;
  double empirical = 0.0;
  double std_err = 0.0;
  double rel_err = 0.0;
  std::uint64_t seed = 0;
};

// Outcome of diagonality_check / single_mode_check on one layer at one width,
// judged on the kernel pooled over all seed replicates of that width.
struct StructureFinding {
  std::size_t width = 0;
  std::size_t replicates = 0;
  std::size_t layer = 0;
  bool diagonal = false;
  bool single_mode = false;
  int located_mode = 0;
  int expected_mode = 0;
};

struct SweepResult {
  std::vector<ResultRow> rows;
  std::vector<StructureFinding> structure;
  bool structure_pass = true;
};

// One row per (width, seed, radial bin) in that order. Cells run one after
// another; the draws inside each cell are spread over worker threads.
SweepResult converge_sweep(const SweepSpec& spec);

// Median rel_err for each width of the sweep, in spec order.
std::vector<double> median_rel_err(const SweepSpec& spec,
                                   const std::vector<ResultRow>& rows);

struct SuiteOptions {
  Tolerances tolerances;
  std::vector<double> thetas;
  Vec2 translation = {0.0, 0.0};
  std::size_t moment_draws = 100000;
  std::size_t constraint_trials = 100;
  std::size_t cubic_modes = 64;
  bool inject_two_mode_filter = false;
};

SuiteOptions suite_options(const RunConfig& run);

struct SuiteItem {
  std::string name;
  double max_dev = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::vector<SuiteItem> items;
  bool pass() const;
  const SuiteItem& item(const std::string& name) const;
};

// Runs the equivariance and oracle battery on `config`. Failures are report
// entries; nothing is thrown for a failing check.
SuiteReport equivariance_suite(const NetworkConfig& config, std::uint64_t seed,
                               const SuiteOptions& options);

// CSV with header
// L,width,draws,mode,bin,analytic,empirical,std_err,rel_err,seed
std::string rows_to_csv(const std::vector<ResultRow>& rows);

// Summary object with keys in sorted order:
// {"max_dev","pass","runtime_seconds","suite"}. runtime_seconds is null when
// not recorded.
std::string summary_json(const std::string& suite, bool pass, double max_dev,
                         const double* runtime_seconds);

std::string suite_to_csv(const SuiteReport& report);
std::string suite_to_json(const SuiteReport& report,
                          const double* runtime_seconds);

// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace steergp

#endif  // STEERGP_EXPERIMENTS_H_
