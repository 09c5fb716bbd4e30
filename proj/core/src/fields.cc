#include "steergp/fields.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>

#include "steergp/error.h"

namespace steergp {

double evaluate(const RadialProfile& profile, double r) {
  return std::visit(
      [r](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ConstantProfile>) {
          return p.value;
        } else if constexpr (std::is_same_v<T, GaussianProfile>) {
          const double d = (r - p.center) / p.width;
          return p.amplitude * std::exp(-0.5 * d * d);
        } else {
          return p.amplitude / std::pow(1.0 + r / p.scale, p.power);
        }
      },
      profile);
}

GroupElement GroupElement::Make(double theta, Vec2 t) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double th = std::fmod(theta, kTwoPi);
  if (th < 0.0) th += kTwoPi;
  if (th >= kTwoPi) th = 0.0;
  return {th, t};
}

std::size_t min_angular_count(ModeWindow window) {
  return 2 * static_cast<std::size_t>(window.max_abs()) + 2;
}

namespace {

// exp(2 pi i j / A) for j in [0, A). Indexing with (m b) mod A keeps every
// phase exact to table precision regardless of |m b|.
std::vector<Complex> unit_roots(std::size_t count) {
  std::vector<Complex> w(count);
  for (std::size_t j = 0; j < count; ++j) {
    w[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                               static_cast<double>(count));
  }
  return w;
}

std::size_t phase_index(long long m, std::size_t b, std::size_t count) {
  const long long a = static_cast<long long>(count);
  long long r = (m * static_cast<long long>(b)) % a;
  if (r < 0) r += a;
  return static_cast<std::size_t>(r);
}

}  // namespace

ModeField angular_decompose(const PolarGridField& f, ModeWindow window,
                            int rep_index) {
  const std::size_t count = f.angular_count();
  if (static_cast<std::size_t>(window.width()) > count) {
    throw BandlimitError("angular_decompose: window of " +
                         std::to_string(window.width()) + " modes exceeds " +
                         std::to_string(count) + " angular samples");
  }
  const auto w = unit_roots(count);
  ModeField out(rep_index, f.grid(), f.channels(), window);
  const double scale = 1.0 / static_cast<double>(count);
  for (std::size_t i = 0; i < f.channels(); ++i) {
    for (int m = window.lo; m <= window.hi; ++m) {
      auto row = out.row(i, m);
      for (std::size_t a = 0; a < f.bins(); ++a) {
        Complex acc{};
        for (std::size_t b = 0; b < count; ++b) {
          acc += f.at(i, a, b) * w[phase_index(m, b, count)];
        }
        row[a] = acc * scale;
      }
    }
  }
  return out;
}

PolarGridField angular_reconstruct(const ModeField& f,
                                   std::size_t angular_count) {
  if (angular_count < min_angular_count(f.window())) {
    throw BandlimitError("angular_reconstruct: " +
                         std::to_string(angular_count) +
                         " angles cannot represent modes up to |" +
                         std::to_string(f.window().max_abs()) + "|");
  }
  const auto w = unit_roots(angular_count);
  PolarGridField out(f.grid(), angular_count, f.channels());
  const ModeWindow win = f.window();
  for (std::size_t i = 0; i < f.channels(); ++i) {
    for (std::size_t a = 0; a < f.bins(); ++a) {
      for (std::size_t b = 0; b < angular_count; ++b) {
        Complex acc{};
        for (int m = win.lo; m <= win.hi; ++m) {
          acc += f.at(i, m, a) * w[phase_index(-m, b, angular_count)];
        }
        out.at(i, a, b) = acc;
      }
    }
  }
  return out;
}

ModeField rotate_mode_field(const ModeField& f, double theta) {
  ModeField out = f;
  const ModeWindow win = f.window();
  for (std::size_t i = 0; i < f.channels(); ++i) {
    for (int n = win.lo; n <= win.hi; ++n) {
      const Complex phase =
          std::polar(1.0, static_cast<double>(f.rep_index() + n) * theta);
      for (Complex& v : out.row(i, n)) v *= phase;
    }
  }
  return out;
}

PolarGridField translate_polar_field(const PolarGridField& f, Vec2 t) {
  PolarGridField out = f;
  for (std::size_t a = 0; a < f.bins(); ++a) {
    const double p = f.grid()[a];
    for (std::size_t b = 0; b < f.angular_count(); ++b) {
      const double psi = f.angle(b);
      const double dot = p * (t[0] * std::cos(psi) + t[1] * std::sin(psi));
      const Complex phase = std::polar(1.0, -dot);
      for (std::size_t i = 0; i < f.channels(); ++i) out.at(i, a, b) *= phase;
    }
  }
  return out;
}

TranslationResult translate_mode_field(const ModeField& f, Vec2 t,
                                       int mode_margin) {
  if (mode_margin < 0) throw WindowError("mode_margin must be non-negative");
  const ModeWindow target = f.window().widened(mode_margin);
  // Guard band: Jacobi-Anger coefficients J_m(p|t|) decay super-exponentially
  // once |m| exceeds p|t|, so this many extra modes bounds the aliasing.
  const double reach = f.grid().max() * std::hypot(t[0], t[1]);
  const int guard = mode_margin + static_cast<int>(std::ceil(reach)) + 16;
  const ModeWindow extended = target.widened(guard);
  const std::size_t count = min_angular_count(extended);

  const PolarGridField moved = translate_polar_field(angular_reconstruct(f, count), t);
  const ModeField wide = angular_decompose(moved, extended, f.rep_index());

  TranslationResult result{ModeField(f.rep_index(), f.grid(), f.channels(), target),
                           0.0};
  double tail = 0.0;
  for (std::size_t i = 0; i < f.channels(); ++i) {
    for (int m = extended.lo; m <= extended.hi; ++m) {
      if (target.contains(m)) {
        std::ranges::copy(wide.row(i, m), result.field.row(i, m).begin());
      } else {
        for (const Complex& v : wide.row(i, m)) tail += std::norm(v);
      }
    }
  }
  result.truncation_residual = std::sqrt(tail);
  return result;
}

ModeField synth_field(const std::vector<FieldTerm>& terms,
                      const RadialGrid& grid, int rep_index,
                      std::size_t channels, ModeWindow window) {
  ModeField out(rep_index, grid, channels, window);
  for (const FieldTerm& term : terms) {
    if (!window.contains(term.mode)) {
      throw WindowError("synth_field: mode " + std::to_string(term.mode) +
                        " outside window [" + std::to_string(window.lo) +
                        ", " + std::to_string(window.hi) + "]");
    }
    if (term.channel >= channels) {
      throw ShapeError("synth_field: channel " + std::to_string(term.channel) +
                       " out of range");
    }
    auto row = out.row(term.channel, term.mode);
    for (std::size_t a = 0; a < grid.size(); ++a) {
      row[a] += term.amplitude * evaluate(term.profile, grid[a]);
    }
  }
  return out;
}

}  // namespace steergp
