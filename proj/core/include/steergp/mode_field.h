#ifndef STEERGP_MODE_FIELD_H_
#define STEERGP_MODE_FIELD_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "steergp/radial_grid.h"

namespace steergp {

using Complex = std::complex<double>;

// Inclusive range of angular modes [lo, hi].
struct ModeWindow {
  int lo = 0;
  int hi = 0;

  int width() const { return hi - lo + 1; }
  bool contains(int n) const { return n >= lo && n <= hi; }
  int max_abs() const;
  ModeWindow shifted(int delta) const { return {lo + delta, hi + delta}; }
  ModeWindow widened(int margin) const { return {lo - margin, hi + margin}; }
  // Support of a cubic product of fields living on this window.
  ModeWindow tripled() const { return {2 * lo - hi, 2 * hi - lo}; }

  friend bool operator==(const ModeWindow&, const ModeWindow&) = default;
};

// Complex feature field in angular-mode representation, F_{i,n}(p_a).
//
// Storage is dense and row-major over [channel][mode][radial bin]. Modes
// outside the window are zero by convention; value() returns 0 for them.
class ModeField {
 public:
  ModeField(int rep_index, RadialGrid grid, std::size_t channels,
            ModeWindow window);

  int rep_index() const { return rep_index_; }
  void set_rep_index(int k) { rep_index_ = k; }
  const RadialGrid& grid() const { return grid_; }
  std::size_t channels() const { return channels_; }
  std::size_t bins() const { return grid_.size(); }
  ModeWindow window() const { return window_; }

  Complex& at(std::size_t channel, int mode, std::size_t bin);
  const Complex& at(std::size_t channel, int mode, std::size_t bin) const;
  Complex value(std::size_t channel, int mode, std::size_t bin) const;

  // Radial profile of one (channel, mode) pair.
  std::span<Complex> row(std::size_t channel, int mode);
  std::span<const Complex> row(std::size_t channel, int mode) const;

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  // Sum of |F|^2 over all entries.
  double squared_norm() const;

  // Copy onto a wider (or equal) window, zero filling new modes.
  ModeField rewindowed(ModeWindow window) const;

  friend bool operator==(const ModeField&, const ModeField&) = default;

 private:
  std::size_t offset(std::size_t channel, int mode, std::size_t bin) const;

  int rep_index_;
  RadialGrid grid_;
  std::size_t channels_;
  ModeWindow window_;
  std::vector<Complex> data_;
};

// Largest |a - b| over entries, normalised by the largest |b| (or 1 if b is
// identically zero). Fields must share grid, channels and window.
double max_relative_deviation(const ModeField& a, const ModeField& b);

// Complex field on a polar Fourier-space grid, f_i(p_a, psi_b) with
// psi_b = 2 pi b / A. Row-major [channel][radial bin][angle].
class PolarGridField {
 public:
  PolarGridField(RadialGrid grid, std::size_t angular_count,
                 std::size_t channels);

  const RadialGrid& grid() const { return grid_; }
  std::size_t angular_count() const { return angular_count_; }
  std::size_t channels() const { return channels_; }
  std::size_t bins() const { return grid_.size(); }
  double angle(std::size_t b) const;

  Complex& at(std::size_t channel, std::size_t bin, std::size_t b) {
    return data_[(channel * grid_.size() + bin) * angular_count_ + b];
  }
  const Complex& at(std::size_t channel, std::size_t bin,
                    std::size_t b) const {
    return data_[(channel * grid_.size() + bin) * angular_count_ + b];
  }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

 private:
  RadialGrid grid_;
  std::size_t angular_count_;
  std::size_t channels_;
  std::vector<Complex> data_;
};

double max_relative_deviation(const PolarGridField& a,
                              const PolarGridField& b);

}  // namespace steergp

#endif  // STEERGP_MODE_FIELD_H_
