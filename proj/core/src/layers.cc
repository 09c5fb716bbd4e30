#include <fftw3.h>

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "steergp/error.h"
#include "steergp/scnn.h"

namespace steergp {

namespace {

// z_i += conj(w) * y_j over all modes of y, with w the (i, j) filter block.
void accumulate_block(const Complex* w, const ModeField& y, std::size_t j, int q,
                      ModeField& z, std::size_t i) {
  const ModeWindow in_win = y.window();
  const std::size_t bins = y.bins();
  for (int n = in_win.lo; n <= in_win.hi; ++n) {
    auto src = y.row(j, n);
    auto dst = z.row(i, n - q);
    // Written out so the compiler skips the inf/NaN recovery path of
    // std::complex multiplication; this loop dominates the sweeps.
    for (std::size_t a = 0; a < bins; ++a) {
      const double wr = w[a].real();
      const double wi = w[a].imag();
      const double yr = src[a].real();
      const double yi = src[a].imag();
      dst[a] += Complex(wr * yr + wi * yi, wr * yi - wi * yr);
    }
  }
}

}  // namespace

ModeField apply_linear(const FilterLayer& filter, const ModeField& y) {
  if (y.channels() != filter.in_channels) {
    throw ShapeError("apply_linear: input has " + std::to_string(y.channels()) +
                     " channels, filter expects " +
                     std::to_string(filter.in_channels));
  }
  if (y.bins() != filter.bins) {
    throw ShapeError("apply_linear: radial grid size differs from filter");
  }
  const int q = filter.mode;
  ModeField z(y.rep_index() + q, y.grid(), filter.out_channels, y.window().shifted(-q));
  for (std::size_t i = 0; i < filter.out_channels; ++i) {
    for (std::size_t j = 0; j < filter.in_channels; ++j) {
      accumulate_block(&filter.values[(i * filter.in_channels + j) * y.bins()], y, j, q, z, i);
    }
  }
  return z;
}

ModeField apply_sampled_linear(const NetworkConfig& config, std::size_t layer,
                               std::uint64_t seed, const ModeField& y) {
  const std::size_t n_in = config.widths[layer];
  const std::size_t n_out = config.widths[layer + 1];
  if (y.channels() != n_in) {
    throw ShapeError("apply_sampled_linear: input has " + std::to_string(y.channels()) +
                     " channels, layer expects " + std::to_string(n_in));
  }
  const int q = config.filter_modes[layer];
  const double sd = filter_std(config, layer);
  ModeField z(y.rep_index() + q, y.grid(), n_out, y.window().shifted(-q));
  std::vector<Complex> w(y.bins());
  for (std::size_t i = 0; i < n_out; ++i) {
    for (std::size_t j = 0; j < n_in; ++j) {
      sample_filter_block(seed, layer, i, j, sd, w);
      accumulate_block(w.data(), y, j, q, z, i);
    }
  }
  return z;
}

namespace {

void cubic_naive(const ModeField& z, ModeField& y) {
  const ModeWindow in = z.window();
  const ModeWindow out = y.window();
  for (std::size_t i = 0; i < z.channels(); ++i) {
    for (std::size_t a = 0; a < z.bins(); ++a) {
      for (int m = out.lo; m <= out.hi; ++m) {
        Complex acc{};
        for (int k = in.lo; k <= in.hi; ++k) {
          const Complex zk = std::conj(z.at(i, k, a));
          for (int n = in.lo; n <= in.hi; ++n) {
            const int r = m + k - n;
            if (in.contains(r)) acc += zk * z.at(i, n, a) * z.at(i, r, a);
          }
        }
        y.at(i, m, a) = acc;
      }
    }
  }
}

// Cached FFTW plans per transform length. Planning is serialised; executing a
// plan on fresh arrays is thread safe.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  std::pair<fftw_plan, fftw_plan> get(int n) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    std::vector<Complex> scratch(static_cast<std::size_t>(n));
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, flags);
    fftw_plan bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, flags);
    return plans_.emplace(n, std::make_pair(fwd, bwd)).first->second;
  }

  ~PlanCache() {
    for (auto& [n, p] : plans_) {
      fftw_destroy_plan(p.first);
      fftw_destroy_plan(p.second);
    }
  }

 private:
  std::mutex mutex_;
  std::map<int, std::pair<fftw_plan, fftw_plan>> plans_;
};

int smooth_size(int n) {
  // Next size of the form 2^a 3^b 5^c.
  for (int s = n;; ++s) {
    int r = s;
    for (int f : {2, 3, 5}) {
      while (r % f == 0) r /= f;
    }
    if (r == 1) return s;
  }
}

// With g(x) = sum_j Z_{lo+j} x^j and x = exp(-i psi), the product
// conj(Z) Z Z equals x^lo |g|^2 g, whose Laurent coefficients span
// -(W-1)..2(W-1). Sampling g on N >= 3W - 2 points of the circle and taking
// |g|^2 g pointwise recovers them without wrap-around.
void cubic_fft(const ModeField& z, ModeField& y) {
  const ModeWindow in = z.window();
  const ModeWindow out = y.window();
  const int w = in.width();
  const int n = smooth_size(3 * w - 2);
  const auto [fwd, bwd] = PlanCache::instance().get(n);
  std::vector<Complex> buf(static_cast<std::size_t>(n));
  auto* raw = reinterpret_cast<fftw_complex*>(buf.data());
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < z.channels(); ++i) {
    for (std::size_t a = 0; a < z.bins(); ++a) {
      std::fill(buf.begin(), buf.end(), Complex{});
      for (int j = 0; j < w; ++j) buf[static_cast<std::size_t>(j)] = z.at(i, in.lo + j, a);
      fftw_execute_dft(fwd, raw, raw);
      for (Complex& v : buf) v *= std::norm(v);
      fftw_execute_dft(bwd, raw, raw);
      for (int m = out.lo; m <= out.hi; ++m) {
        int idx = m - in.lo;
        if (idx < 0) idx += n;
        y.at(i, m, a) = buf[static_cast<std::size_t>(idx)] * scale;
      }
    }
  }
}

}  // namespace

ModeField apply_cubic(const ModeField& z, CubicMethod method) {
  ModeField y(z.rep_index(), z.grid(), z.channels(), z.window().tripled());
  if (method == CubicMethod::kNaive) {
    cubic_naive(z, y);
  } else {
    cubic_fft(z, y);
  }
  return y;
}

}  // namespace steergp
