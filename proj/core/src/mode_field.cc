#include "steergp/mode_field.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "steergp/error.h"

namespace steergp {

int ModeWindow::max_abs() const { return std::max(std::abs(lo), std::abs(hi)); }

ModeField::ModeField(int rep_index, RadialGrid grid, std::size_t channels,
                     ModeWindow window)
    : rep_index_(rep_index),
      grid_(std::move(grid)),
      channels_(channels),
      window_(window) {
  if (channels_ == 0) throw ShapeError("mode field needs at least one channel");
  if (window_.lo > window_.hi) {
    throw WindowError("mode window [" + std::to_string(window_.lo) + ", " +
                      std::to_string(window_.hi) + "] is empty");
  }
  data_.assign(channels_ * static_cast<std::size_t>(window_.width()) *
                   grid_.size(),
               Complex{});
}

std::size_t ModeField::offset(std::size_t channel, int mode,
                              std::size_t bin) const {
  return (channel * static_cast<std::size_t>(window_.width()) +
          static_cast<std::size_t>(mode - window_.lo)) *
             grid_.size() +
         bin;
}

Complex& ModeField::at(std::size_t channel, int mode, std::size_t bin) {
  return data_[offset(channel, mode, bin)];
}

const Complex& ModeField::at(std::size_t channel, int mode,
                             std::size_t bin) const {
  return data_[offset(channel, mode, bin)];
}

Complex ModeField::value(std::size_t channel, int mode, std::size_t bin) const {
  if (!window_.contains(mode)) return {};
  return at(channel, mode, bin);
}

std::span<Complex> ModeField::row(std::size_t channel, int mode) {
  return std::span<Complex>(data_).subspan(offset(channel, mode, 0),
                                           grid_.size());
}

std::span<const Complex> ModeField::row(std::size_t channel, int mode) const {
  return std::span<const Complex>(data_).subspan(offset(channel, mode, 0),
                                                 grid_.size());
}

double ModeField::squared_norm() const {
  double s = 0.0;
  for (const Complex& c : data_) s += std::norm(c);
  return s;
}

ModeField ModeField::rewindowed(ModeWindow window) const {
  if (window.lo > window_.lo || window.hi < window_.hi) {
    throw WindowError("rewindowed: target window does not contain the source");
  }
  ModeField out(rep_index_, grid_, channels_, window);
  for (std::size_t i = 0; i < channels_; ++i) {
    for (int n = window_.lo; n <= window_.hi; ++n) {
      std::ranges::copy(row(i, n), out.row(i, n).begin());
    }
  }
  return out;
}

namespace {

template <typename Span>
double relative_deviation(Span a, Span b) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    num = std::max(num, std::abs(a[x] - b[x]));
    den = std::max(den, std::abs(b[x]));
  }
  return den > 0.0 ? num / den : num;
}

}  // namespace

double max_relative_deviation(const ModeField& a, const ModeField& b) {
  if (a.grid() != b.grid() || a.channels() != b.channels() ||
      a.window() != b.window()) {
    throw ShapeError("max_relative_deviation: field shapes differ");
  }
  return relative_deviation(a.data(), b.data());
}

PolarGridField::PolarGridField(RadialGrid grid, std::size_t angular_count,
                               std::size_t channels)
    : grid_(std::move(grid)), angular_count_(angular_count), channels_(channels) {
  if (angular_count_ == 0) throw ShapeError("polar grid needs angles");
  if (channels_ == 0) throw ShapeError("polar field needs at least one channel");
  data_.assign(channels_ * grid_.size() * angular_count_, Complex{});
}

double PolarGridField::angle(std::size_t b) const {
  return 2.0 * std::numbers::pi * static_cast<double>(b) /
         static_cast<double>(angular_count_);
}

double max_relative_deviation(const PolarGridField& a,
                              const PolarGridField& b) {
  if (a.grid() != b.grid() || a.channels() != b.channels() ||
      a.angular_count() != b.angular_count()) {
    throw ShapeError("max_relative_deviation: polar field shapes differ");
  }
  return relative_deviation(a.data(), b.data());
}

}  // namespace steergp
