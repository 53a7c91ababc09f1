#include <cmath>
#include <random>

#include "lvmforge/analysis.hpp"
#include "lvmforge/error.hpp"
#include "lvmforge/text.hpp"

namespace lvmforge::analysis {

namespace {

double round6(double v) { return *text::parse_real(text::format_fixed6(v)); }

}  // namespace

StepResponse synth_first_order(double y0, double y_inf, double tau, double dt, std::size_t n, double noise_sigma,
                               std::uint64_t seed) {
  if (!(tau > 0.0) || !(dt > 0.0) || n < 3 || !(noise_sigma >= 0.0) || !std::isfinite(y0) || !std::isfinite(y_inf) ||
      !std::isfinite(tau) || !std::isfinite(dt) || !std::isfinite(noise_sigma))
    throw Error(Errc::InvalidParameters, "need tau > 0, dt > 0, n >= 3, noise_sigma >= 0");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, noise_sigma > 0.0 ? noise_sigma : 1.0);
  StepResponse r;
  r.y0 = y0;
  r.y_inf = y_inf;
  r.samples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * dt;
    double y = y_inf + (y0 - y_inf) * std::exp(-t / tau);
    if (noise_sigma > 0.0) y += noise(rng);
    r.samples.push_back({t, y});
  }
  return r;
}

lvm::LvmDocument gen_lvm(std::span<const StepResponse> responses, const GenHeader& header) {
  if (responses.empty()) throw Error(Errc::InvalidParameters, "no responses to write");
  const auto& grid = responses.front().samples;
  for (std::size_t c = 1; c < responses.size(); ++c) {
    const auto& s = responses[c].samples;
    bool same = s.size() == grid.size();
    for (std::size_t k = 0; same && k < s.size(); ++k) same = s[k].x == grid[k].x;
    if (!same) throw Error(Errc::GridMismatch, "response " + std::to_string(c) + " uses a different time grid");
  }

  lvm::LvmDocument doc;
  doc.header.separator = lvm::Separator::Tab;
  doc.header.decimal_separator = ',';
  doc.header.time_pref = lvm::TimePref::Absolute;
  doc.header.operator_name = header.operator_name;
  doc.header.date = header.date;
  doc.header.time = header.time;

  const int channels = static_cast<int>(responses.size());
  const double dt = grid.size() >= 2 ? grid[1].x - grid[0].x : 0.0;
  lvm::LvmSegment seg;
  seg.channels = channels;
  seg.samples_per_channel.assign(responses.size(), 1);
  seg.channel_dates.assign(responses.size(), header.date);
  seg.channel_times.assign(responses.size(), header.time);
  seg.x_dimension.assign(responses.size(), "Time");
  seg.x0.assign(responses.size(), grid.empty() ? 0.0 : round6(grid.front().x));
  seg.delta_x.assign(responses.size(), round6(dt));
  seg.column_names.push_back("X_Value");
  for (int c = 0; c < channels; ++c) seg.column_names.push_back("Channel " + std::to_string(c));
  seg.column_names.push_back(std::string(lvm::kCommentColumn));

  seg.rows.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    lvm::DataRow row;
    row.x = round6(grid[k].x);
    for (const auto& r : responses) row.values.push_back(round6(r.samples[k].y));
    seg.rows.push_back(std::move(row));
  }
  doc.segments.push_back(std::move(seg));
  return doc;
}

}  // namespace lvmforge::analysis
