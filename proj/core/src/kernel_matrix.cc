#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "steergp/error.h"
#include "steergp/kernel.h"

namespace steergp {

namespace {
constexpr double kAnalyticZero = 1e-12;
}

KernelMatrix::KernelMatrix(RadialGrid grid, ModeWindow window)
    : grid_(std::move(grid)), window_(window) {
  if (window_.lo > window_.hi) throw WindowError("kernel window is empty");
  const std::size_t w = static_cast<std::size_t>(window_.width());
  const std::size_t p = grid_.size();
  entries_.assign(w * w * p * p, Complex{});
  std_err_.assign(w * w * p * p, 0.0);
}

std::size_t KernelMatrix::offset(int n, int n2, std::size_t a,
                                 std::size_t a2) const {
  const std::size_t w = static_cast<std::size_t>(window_.width());
  const std::size_t p = grid_.size();
  return ((static_cast<std::size_t>(n - window_.lo) * w +
           static_cast<std::size_t>(n2 - window_.lo)) *
              p +
          a) *
             p +
         a2;
}

Complex& KernelMatrix::at(int n, int n2, std::size_t a, std::size_t a2) {
  return entries_[offset(n, n2, a, a2)];
}
const Complex& KernelMatrix::at(int n, int n2, std::size_t a,
                                std::size_t a2) const {
  return entries_[offset(n, n2, a, a2)];
}
double& KernelMatrix::std_err(int n, int n2, std::size_t a, std::size_t a2) {
  return std_err_[offset(n, n2, a, a2)];
}
double KernelMatrix::std_err(int n, int n2, std::size_t a,
                             std::size_t a2) const {
  return std_err_[offset(n, n2, a, a2)];
}

LayerGaussianCov layer_gaussian_cov(const DiagonalKernel& k, double sigma_w_sq) {
  LayerGaussianCov g{k.grid, k.mode, k.values};
  for (double& v : g.gamma) v *= 0.5 * sigma_w_sq;
  return g;
}

KernelMatrix embed(const DiagonalKernel& k, ModeWindow window) {
  if (!window.contains(k.mode)) {
    throw WindowError("embed: mode " + std::to_string(k.mode) + " outside window");
  }
  KernelMatrix out(k.grid, window);
  for (std::size_t a = 0; a < k.grid.size(); ++a) out.at(k.mode, k.mode, a, a) = k.values[a];
  return out;
}

KernelMatrix activation_kernel(const ModeField& y) {
  const ModeWindow win = y.window();
  const std::size_t bins = y.bins();
  KernelMatrix k(y.grid(), win);
  const double inv = 1.0 / static_cast<double>(y.channels());
  for (int n = win.lo; n <= win.hi; ++n) {
    for (int n2 = win.lo; n2 <= win.hi; ++n2) {
      for (std::size_t a = 0; a < bins; ++a) {
        for (std::size_t a2 = 0; a2 < bins; ++a2) {
          Complex acc{};
          for (std::size_t i = 0; i < y.channels(); ++i) {
            acc += y.at(i, n, a) * std::conj(y.at(i, n2, a2));
          }
          k.at(n, n2, a, a2) = acc * inv;
        }
      }
    }
  }
  return k;
}

DiagonalKernel input_diagonal_kernel(const ModeField& x) {
  std::vector<int> modes;
  const ModeWindow win = x.window();
  for (int n = win.lo; n <= win.hi; ++n) {
    bool nonzero = false;
    for (std::size_t i = 0; i < x.channels() && !nonzero; ++i) {
      for (const Complex& v : x.row(i, n)) nonzero = nonzero || v != Complex{};
    }
    if (nonzero) modes.push_back(n);
  }
  if (modes.size() != 1) {
    throw WindowError("input_diagonal_kernel: input has " +
                      std::to_string(modes.size()) +
                      " nonzero modes; the closed form needs exactly one");
  }
  DiagonalKernel k{x.grid(), modes.front(), std::vector<double>(x.bins(), 0.0)};
  for (std::size_t i = 0; i < x.channels(); ++i) {
    auto row = x.row(i, k.mode);
    for (std::size_t a = 0; a < x.bins(); ++a) k.values[a] += std::norm(row[a]);
  }
  for (double& v : k.values) v /= static_cast<double>(x.channels());
  return k;
}

namespace {

// Entries that vanish structurally still pick up floating-point noise from
// the FFT path, and their standard error is of the same tiny size. Anything
// below kAnalyticZero times the largest co-diagonal magnitude counts as zero.
double zero_floor(const KernelMatrix& k) {
  double scale = 0.0;
  const ModeWindow win = k.window();
  for (int n = win.lo; n <= win.hi; ++n) {
    for (std::size_t a = 0; a < k.bins(); ++a) scale = std::max(scale, std::abs(k.at(n, n, a, a)));
  }
  return kAnalyticZero * (scale > 0.0 ? scale : 1.0);
}

// Whether |v| is distinguishable from zero given its standard error.
bool significant(double magnitude, double se, double sigma_mult, double floor) {
  if (magnitude <= floor) return false;
  return se > 0.0 ? magnitude > sigma_mult * se : true;
}

}  // namespace

DiagonalityReport diagonality_check(const KernelMatrix& k, double sigma_mult) {
  DiagonalityReport rep;
  const double floor = zero_floor(k);
  const ModeWindow win = k.window();
  for (int n = win.lo; n <= win.hi; ++n) {
    for (int n2 = win.lo; n2 <= win.hi; ++n2) {
      for (std::size_t a = 0; a < k.bins(); ++a) {
        for (std::size_t a2 = 0; a2 < k.bins(); ++a2) {
          if (n == n2 && a == a2) continue;
          const double mag = std::abs(k.at(n, n2, a, a2));
          const double se = k.std_err(n, n2, a, a2);
          rep.max_abs = std::max(rep.max_abs, mag);
          double ratio;
          if (mag <= floor) {
            ratio = 0.0;
          } else if (se > 0.0) {
            ratio = mag / se;
          } else {
            ratio = std::numeric_limits<double>::infinity();
          }
          rep.max_ratio = std::max(rep.max_ratio, ratio);
          if (significant(mag, se, sigma_mult, floor)) rep.pass = false;
        }
      }
    }
  }
  return rep;
}

SingleModeReport single_mode_check(const KernelMatrix& k, double sigma_mult) {
  SingleModeReport rep;
  const ModeWindow win = k.window();
  std::vector<double> mass(static_cast<std::size_t>(win.width()), 0.0);
  std::vector<double> var(mass.size(), 0.0);
  for (int n = win.lo; n <= win.hi; ++n) {
    const auto idx = static_cast<std::size_t>(n - win.lo);
    for (std::size_t a = 0; a < k.bins(); ++a) {
      mass[idx] += k.at(n, n, a, a).real();
      const double se = k.std_err(n, n, a, a);
      var[idx] += se * se;
    }
  }
  const double scale = *std::ranges::max_element(mass);
  const double floor = kAnalyticZero * (scale > 0.0 ? scale : 1.0);
  for (int n = win.lo; n <= win.hi; ++n) {
    const auto idx = static_cast<std::size_t>(n - win.lo);
    if (significant(std::abs(mass[idx]), std::sqrt(var[idx]), sigma_mult, floor)) {
      rep.nonzero_modes.push_back(n);
    }
  }
  rep.pass = rep.nonzero_modes.size() == 1;
  if (rep.pass) rep.mode = rep.nonzero_modes.front();
  return rep;
}

KernelMatrix pool_kernels(const std::vector<KernelMatrix>& replicates) {
  if (replicates.empty()) throw ShapeError("pool_kernels: no replicates");
  KernelMatrix out(replicates.front().grid(), replicates.front().window());
  const double count = static_cast<double>(replicates.size());
  std::vector<double> var(out.std_errs().size(), 0.0);
  KernelProvenance prov;
  for (const KernelMatrix& r : replicates) {
    if (!(r.grid() == out.grid()) || !(r.window() == out.window())) {
      throw ShapeError("pool_kernels: replicates differ in grid or window");
    }
    for (std::size_t i = 0; i < var.size(); ++i) {
      out.entries()[i] += r.entries()[i] / count;
      const double se = r.std_errs()[i] / count;
      var[i] += se * se;
    }
    if (r.provenance()) {
      if (prov.draws == 0) {
        prov.seed = r.provenance()->seed;
        prov.config_digest = r.provenance()->config_digest;
      }
      prov.draws += r.provenance()->draws;
    }
  }
  for (std::size_t i = 0; i < var.size(); ++i) out.std_errs()[i] = std::sqrt(var[i]);
  if (prov.draws > 0) out.set_provenance(prov);
  return out;
}

}  // namespace steergp
