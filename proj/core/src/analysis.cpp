#include "lvmforge/analysis.hpp"

#include <cmath>
#include <deque>

#include "lvmforge/error.hpp"

namespace lvmforge::analysis {

std::vector<double> nonlinearity_error(const NonLinearityInput& in) {
  if (in.t_real.size() != in.t_ref.size())
    throw Error(Errc::LengthMismatch, std::to_string(in.t_real.size()) + " real temperatures, " +
                                          std::to_string(in.t_ref.size()) + " references");
  if (in.t_real.empty()) throw Error(Errc::InsufficientData, "no temperature points");

  std::vector<double> out;
  out.reserve(in.t_real.size());
  for (std::size_t i = 0; i < in.t_real.size(); ++i) {
    const double den = in.t_ref30 - in.t_ref[i];
    if (den == 0.0) throw Error(Errc::DenominatorZero, "t_ref30 equals t_ref at index " + std::to_string(i));
    out.push_back(std::abs(in.t_real[i] - in.t_ref[i]) / den * 100.0);
  }
  return out;
}

std::optional<std::size_t> detect_steady_state(std::span<const double> y, std::size_t window, double epsilon) {
  if (window < 2) throw Error(Errc::InvalidParameters, "window must be at least 2");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw Error(Errc::InvalidParameters, "epsilon must be positive");
  if (y.size() < window)
    throw Error(Errc::InsufficientData,
                std::to_string(y.size()) + " samples, window needs " + std::to_string(window));

  // Indices with decreasing (max) and increasing (min) values inside the window.
  std::deque<std::size_t> hi;
  std::deque<std::size_t> lo;
  for (std::size_t j = 0; j < y.size(); ++j) {
    while (!hi.empty() && y[hi.back()] <= y[j]) hi.pop_back();
    while (!lo.empty() && y[lo.back()] >= y[j]) lo.pop_back();
    hi.push_back(j);
    lo.push_back(j);
    if (j + 1 < window) continue;
    const std::size_t start = j + 1 - window;
    if (hi.front() < start) hi.pop_front();
    if (lo.front() < start) lo.pop_front();
    if (y[hi.front()] - y[lo.front()] < epsilon) return start;
  }
  return std::nullopt;
}

std::optional<std::size_t> detect_steady_state(std::span<const lvm::SeriesPoint> samples, std::size_t window,
                                               double epsilon) {
  std::vector<double> y;
  y.reserve(samples.size());
  for (const auto& p : samples) y.push_back(p.y);
  return detect_steady_state(std::span<const double>(y), window, epsilon);
}

double time_constant_fraction() noexcept { return -std::expm1(-1.0); }

double estimate_time_constant(const StepResponse& r) {
  const auto& s = r.samples;
  if (s.size() < 3) throw Error(Errc::InvalidParameters, "a step response needs at least 3 samples");
  if (!std::isfinite(r.y0) || !std::isfinite(r.y_inf)) throw Error(Errc::InvalidParameters, "non-finite y0 or y_inf");
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!std::isfinite(s[k].x) || !std::isfinite(s[k].y))
      throw Error(Errc::InvalidParameters, "non-finite sample at index " + std::to_string(k));
    if (k > 0 && !(s[k].x > s[k - 1].x))
      throw Error(Errc::InvalidParameters, "sample times are not strictly increasing at index " + std::to_string(k));
  }
  if (r.y0 == r.y_inf) throw Error(Errc::DegenerateStep, "y0 equals y_inf");

  const double level = r.y0 + time_constant_fraction() * (r.y_inf - r.y0);
  // Progress towards y_inf, so rising and falling steps share one test.
  const double sign = r.y_inf > r.y0 ? 1.0 : -1.0;
  auto reached = [&](double y) { return sign * (y - level) >= 0.0; };

  if (reached(s.front().y)) {
    if (s.front().y == level) return s.front().x;
    throw Error(Errc::NoCrossing, "response starts beyond the 63.2% level");
  }
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!reached(s[k].y)) continue;
    if (s[k].y == level) return s[k].x;
    const double frac = (level - s[k - 1].y) / (s[k].y - s[k - 1].y);
    return s[k - 1].x + frac * (s[k].x - s[k - 1].x);
  }
  throw Error(Errc::NoCrossing, "response never reaches the 63.2% level");
}

}  // namespace lvmforge::analysis
