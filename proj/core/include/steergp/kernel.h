#ifndef STEERGP_KERNEL_H_
#define STEERGP_KERNEL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steergp/config.h"
#include "steergp/mode_field.h"
#include "steergp/radial_grid.h"

namespace steergp {

struct KernelProvenance {
  std::size_t draws = 0;
  std::uint64_t seed = 0;
  std::string config_digest;

  friend bool operator==(const KernelProvenance&,
                         const KernelProvenance&) = default;
};

// Dense uncentered covariance K_{n,n'}(p_a, p_a'), row-major
// [n][n'][a][a'], with a matching array of Monte Carlo standard errors (all
// zero for analytic kernels).
class KernelMatrix {
 public:
  KernelMatrix(RadialGrid grid, ModeWindow window);

  const RadialGrid& grid() const { return grid_; }
  ModeWindow window() const { return window_; }
  std::size_t bins() const { return grid_.size(); }

  Complex& at(int n, int n2, std::size_t a, std::size_t a2);
  const Complex& at(int n, int n2, std::size_t a, std::size_t a2) const;
  double& std_err(int n, int n2, std::size_t a, std::size_t a2);
  double std_err(int n, int n2, std::size_t a, std::size_t a2) const;

  std::span<Complex> entries() { return entries_; }
  std::span<const Complex> entries() const { return entries_; }
  std::span<double> std_errs() { return std_err_; }
  std::span<const double> std_errs() const { return std_err_; }

  const std::optional<KernelProvenance>& provenance() const {
    return provenance_;
  }
  void set_provenance(KernelProvenance p) { provenance_ = std::move(p); }

  friend bool operator==(const KernelMatrix&, const KernelMatrix&) = default;

 private:
  std::size_t offset(int n, int n2, std::size_t a, std::size_t a2) const;

  RadialGrid grid_;
  ModeWindow window_;
  std::vector<Complex> entries_;
  std::vector<double> std_err_;
  std::optional<KernelProvenance> provenance_;
};

// Single-mode, bin-diagonal kernel K_s(p_a).
struct DiagonalKernel {
  RadialGrid grid;
  int mode = 0;
  std::vector<double> values;
};

// gamma(p) = (sigma_w^2 / 2) K(p): variance of the next pre-activation.
struct LayerGaussianCov {
  RadialGrid grid;
  int mode = 0;
  std::vector<double> gamma;
};

LayerGaussianCov layer_gaussian_cov(const DiagonalKernel& k, double sigma_w_sq);

// Embeds K_s(p) as a KernelMatrix on `window` (zero elsewhere, zero SE).
KernelMatrix embed(const DiagonalKernel& k, ModeWindow window);

// Channel average of one activation: (1/n) sum_i Y_{i,n}(p) conj(Y_{i,n'}(p')).
KernelMatrix activation_kernel(const ModeField& y);

// Co-diagonal of the activation kernel at the single nonzero mode of `x`.
// Throws WindowError if x has zero or several nonzero modes.
DiagonalKernel input_diagonal_kernel(const ModeField& x);

// Mean over `draws` independent filter draws of the activation kernel of
// Y^layer, with per-entry standard errors across draws. Draws run in
// parallel; the reduction is in draw order, so the result is independent of
// scheduling. `layer` may be L + 1 when a trailing linear layer is set.
KernelMatrix empirical_kernel(const NetworkConfig& config, const ModeField& x,
                              std::size_t layer, std::size_t draws,
                              std::uint64_t seed);

// Same, for every layer 0..L (and L + 1 if configured) from shared draws.
std::vector<KernelMatrix> empirical_kernels(const NetworkConfig& config,
                                            const ModeField& x,
                                            std::size_t draws,
                                            std::uint64_t seed);

// Mean of independent estimates of the same kernel (one per seed), with
// standard errors combined accordingly. Provenance sums the draws and keeps
// the first seed.
KernelMatrix pool_kernels(const std::vector<KernelMatrix>& replicates);

// One block of the infinite-width recursion:
// K_out(p) = 6 (sigma_w^2 / 2)^3 K_in(p)^3 at mode s_in - q.
DiagonalKernel analytic_step(const DiagonalKernel& k_prev, double sigma_w_sq,
                             int q);

// Trailing linear layer: (sigma_w^2 / 2) K at mode s - q.
DiagonalKernel analytic_linear_step(const DiagonalKernel& k_prev,
                                    double sigma_w_sq, int q);

// Closed form after `depth` blocks,
//   K_s(p) = (6 (sigma_w^2/2)^3)^((3^L - 1)/2) K0_{s + q_0 + ...}(p)^(3^L),
// times sigma_w^2/2 when `final_linear` is set. q_list has depth entries, or
// depth + 1 with final_linear. Throws ShapeError on a length mismatch.
DiagonalKernel analytic_closed(const DiagonalKernel& k0, std::size_t depth,
                               const std::vector<int>& q_list,
                               double sigma_w_sq, bool final_linear = false);

// The same quantity by repeated analytic_step.
DiagonalKernel analytic_iterated(const DiagonalKernel& k0, std::size_t depth,
                                 const std::vector<int>& q_list,
                                 double sigma_w_sq, bool final_linear = false);

struct DiagonalityReport {
  // Largest off-diagonal |K| / SE (empirical) or |K| (analytic).
  double max_ratio = 0.0;
  double max_abs = 0.0;
  bool pass = true;
};

// Off-diagonal means n != n' or a != a'. An entry counts as zero when it is
// within sigma_mult standard errors of zero or below 1e-12 times the largest
// co-diagonal magnitude (the floating-point noise floor); entries with
// SE == 0 are judged by the floor alone.
DiagonalityReport diagonality_check(const KernelMatrix& k, double sigma_mult);

struct SingleModeReport {
  std::optional<int> mode;
  std::vector<int> nonzero_modes;
  bool pass = false;
};

// Finds the modes whose co-diagonal mass sum_a K_{n,n}(p_a, p_a) is nonzero by
// the same rule. Radial bins are statistically independent (each bin has its
// own filters), so the standard errors of the mass add in quadrature. Pass iff
// exactly one mode is nonzero.
SingleModeReport single_mode_check(const KernelMatrix& k, double sigma_mult);

struct MomentEstimate {
  double estimate = 0.0;
  double std_err = 0.0;
  double reference = 0.0;  // k! gamma^k
};

// Monte Carlo E|Z|^{2k} for Z circularly-symmetric complex normal with
// E|Z|^2 = gamma.
MomentEstimate moment_oracle(double gamma, int k, std::size_t draws,
                             std::uint64_t seed);

// Sample from the limiting Gaussian process: each (channel, bin) at mode
// k.mode is an independent circular complex normal with variance K(p).
// `window` must contain k.mode; defaults to the single mode.
ModeField gp_sample(const DiagonalKernel& k, int rep_index,
                    std::size_t channels, std::uint64_t seed,
                    std::optional<ModeWindow> window = std::nullopt);

}  // namespace steergp

#endif  // STEERGP_KERNEL_H_
