#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lvmforge/calendar.hpp"
#include "lvmforge/lvm.hpp"

// Thermocouple characterisation: non-linearity error against reference
// temperatures, steady-state detection and first-order time constants.
namespace lvmforge::analysis {

struct NonLinearityInput {
  std::vector<double> t_real;  // computed real temperatures, degrees Celsius
  std::vector<double> t_ref;   // reference temperatures
  double t_ref30 = 0.0;        // reference temperature at ambient
};

/// Percent error per point: |t_real[i] - t_ref[i]| / (t_ref30 - t_ref[i]) * 100.
/// The denominator is signed and taken per point.
/// Throws LengthMismatch, InsufficientData (no points), DenominatorZero.
std::vector<double> nonlinearity_error(const NonLinearityInput& input);

inline constexpr std::size_t kDefaultWindow = 5;
inline constexpr double kDefaultEpsilon = 0.2;

/// Smallest i such that max - min of y over [i, i + window) is below epsilon.
/// Runs in O(n) with monotonic deques.
/// Throws InvalidParameters (window < 2, epsilon <= 0 or not finite) and
/// InsufficientData (fewer than window samples).
std::optional<std::size_t> detect_steady_state(std::span<const double> y, std::size_t window = kDefaultWindow,
                                               double epsilon = kDefaultEpsilon);
std::optional<std::size_t> detect_steady_state(std::span<const lvm::SeriesPoint> samples,
                                               std::size_t window = kDefaultWindow,
                                               double epsilon = kDefaultEpsilon);

struct StepResponse {
  std::vector<lvm::SeriesPoint> samples;  // x = time in seconds, y = temperature
  double y0 = 0.0;
  double y_inf = 0.0;
};

/// Fraction of the total change a first-order system covers in one time
/// constant, 1 - 1/e.
double time_constant_fraction() noexcept;

/// Time at which the response first reaches y0 + (1 - 1/e)(y_inf - y0),
/// linearly interpolated between the bracketing samples. The result is the
/// absolute sample time, so a response starting at t = 0 yields the time
/// constant itself.
/// Throws InvalidParameters (< 3 samples, time not strictly increasing,
/// non-finite input), DegenerateStep (y0 == y_inf), NoCrossing.
double estimate_time_constant(const StepResponse& response);

/// y_k = y_inf + (y0 - y_inf) exp(-k dt / tau) + N(0, noise_sigma) at t_k = k dt,
/// drawn from a std::mt19937_64 seeded with `seed`.
/// Throws InvalidParameters.
StepResponse synth_first_order(double y0, double y_inf, double tau, double dt, std::size_t n, double noise_sigma,
                               std::uint64_t seed);

struct GenHeader {
  std::string operator_name;
  CalendarDate date;
  HighPrecisionTime time;
};

/// One segment, one channel per response, tab separated with ',' decimals,
/// Delta_X = dt, values rounded to six decimals. Throws GridMismatch when the
/// responses do not share the same time grid, InvalidParameters when empty.
lvm::LvmDocument gen_lvm(std::span<const StepResponse> responses, const GenHeader& header);

}  // namespace lvmforge::analysis
