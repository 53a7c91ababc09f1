#include <gtest/gtest.h>

#include <cmath>

#include "lvmforge/analysis.hpp"
#include "lvmforge/error.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lvmforge;
using namespace lvmforge::analysis;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::IoError;
}

std::vector<double> ys(const StepResponse& r) {
  std::vector<double> out;
  for (const auto& p : r.samples) out.push_back(p.y);
  return out;
}

}  // namespace

TEST(NonLinearity, Examples) {
  const auto e = nonlinearity_error({{52.0}, {50.0}, 300.0});
  ASSERT_EQ(e.size(), 1u);
  EXPECT_NEAR(e[0], 0.8, 1e-12);
  EXPECT_EQ(nonlinearity_error({{50.0}, {50.0}, 300.0}), std::vector<double>{0.0});
  EXPECT_EQ(error_of([] { nonlinearity_error({{1.0, 2.0}, {50.0, 300.0}, 300.0}); }), Errc::DenominatorZero);
  EXPECT_EQ(error_of([] { nonlinearity_error({{1.0}, {1.0, 2.0}, 300.0}); }), Errc::LengthMismatch);
  EXPECT_EQ(error_of([] { nonlinearity_error({{}, {}, 300.0}); }), Errc::InsufficientData);
}

TEST(NonLinearity, DenominatorIsSigned) {
  // As written: a reference above t_ref30 gives a negative percentage.
  const auto e = nonlinearity_error({{310.0}, {320.0}, 300.0});
  EXPECT_NEAR(e[0], -50.0, 1e-12);
}

TEST(NonLinearityProperty, ScaleLaw) {
  testkit::Gen g(3);
  for (int i = 0; i < 500; ++i) {
    const double ref = g.uniform(-50, 500);
    double ref30 = g.uniform(-50, 500);
    if (std::abs(ref30 - ref) < 1) ref30 = ref + 10;
    const double gap = g.uniform(-20, 20);
    const double c = g.uniform(-5, 5);
    const double base = nonlinearity_error({{ref + gap}, {ref}, ref30})[0];
    const double scaled = nonlinearity_error({{ref + c * gap}, {ref}, ref30})[0];
    EXPECT_NEAR(scaled, std::abs(c) * base, 1e-9 * (1 + std::abs(scaled)));
  }
}

TEST(SteadyState, Examples) {
  const std::vector<double> flat{20, 20, 20, 20};
  EXPECT_EQ(detect_steady_state(std::span<const double>(flat), 3, 0.1), 0u);

  std::vector<double> ramp;
  for (int i = 0; i < 50; ++i) ramp.push_back(i * 1.0);
  EXPECT_FALSE(detect_steady_state(std::span<const double>(ramp), 3, 0.5));

  const auto decay = synth_first_order(100, 20, 10, 1, 100, 0, 0);
  const auto y = ys(decay);
  const auto expected = testkit::brute_force_steady_state(y, 5, 0.2);
  ASSERT_TRUE(expected);
  EXPECT_EQ(detect_steady_state(std::span<const double>(y), 5, 0.2), expected);
  EXPECT_EQ(detect_steady_state(std::span<const lvm::SeriesPoint>(decay.samples), 5, 0.2), expected);
  // Spans over four steps: 80 e^{-i/10} (1 - e^{-0.4}) < 0.2 first holds at i = 49.
  EXPECT_EQ(*expected, 49u);
}

TEST(SteadyState, Errors) {
  const std::vector<double> y{1, 2};
  EXPECT_EQ(error_of([&] { detect_steady_state(std::span<const double>(y), 3, 0.1); }), Errc::InsufficientData);
  EXPECT_EQ(error_of([&] { detect_steady_state(std::span<const double>(y), 1, 0.1); }), Errc::InvalidParameters);
  EXPECT_EQ(error_of([&] { detect_steady_state(std::span<const double>(y), 2, 0.0); }), Errc::InvalidParameters);
}

TEST(SteadyStateProperty, MatchesBruteForce) {
  testkit::Gen g(17);
  for (int i = 0; i < 500; ++i) {
    const int n = g.integer(3, 300);
    const std::size_t window = static_cast<std::size_t>(g.integer(2, std::min(n, 12)));
    const double eps = g.uniform(0.01, 3.0);
    std::vector<double> y;
    double level = g.uniform(0, 100);
    for (int k = 0; k < n; ++k) {
      if (g.chance(0.3)) level += g.uniform(-2, 2);
      y.push_back(g.chance(0.2) ? std::round(level) : level + g.uniform(-0.5, 0.5));
    }
    ASSERT_EQ(detect_steady_state(std::span<const double>(y), window, eps),
              testkit::brute_force_steady_state(y, window, eps))
        << i;
  }
}

TEST(TimeConstant, NoiselessRecovery) {
  const auto r = synth_first_order(100, 20, 15, 0.5, 200, 0, 0);
  EXPECT_NEAR(estimate_time_constant(r), 15.0, 0.05);
}

TEST(TimeConstant, RisingStep) {
  const auto r = synth_first_order(20, 100, 8, 0.25, 200, 0, 0);
  EXPECT_NEAR(estimate_time_constant(r), 8.0, 0.125);
}

TEST(TimeConstant, ExactSampleHit) {
  const double y0 = 100, yinf = 20;
  const double level = y0 + time_constant_fraction() * (yinf - y0);
  StepResponse r{{{0, 100}, {5, 80}, {12.5, level}, {20, 25}}, y0, yinf};
  EXPECT_EQ(estimate_time_constant(r), 12.5);
}

TEST(TimeConstant, FractionIsFullPrecision) { EXPECT_EQ(time_constant_fraction(), 1.0 - std::exp(-1.0)); }

TEST(TimeConstant, Errors) {
  StepResponse never{{{0, 100}, {1, 95}, {2, 92}}, 100, 20};
  EXPECT_EQ(error_of([&] { estimate_time_constant(never); }), Errc::NoCrossing);
  StepResponse flat{{{0, 20}, {1, 20}, {2, 20}}, 20, 20};
  EXPECT_EQ(error_of([&] { estimate_time_constant(flat); }), Errc::DegenerateStep);
  StepResponse shortr{{{0, 100}, {1, 20}}, 100, 20};
  EXPECT_EQ(error_of([&] { estimate_time_constant(shortr); }), Errc::InvalidParameters);
  StepResponse unsorted{{{0, 100}, {2, 50}, {1, 20}}, 100, 20};
  EXPECT_EQ(error_of([&] { estimate_time_constant(unsorted); }), Errc::InvalidParameters);
}

TEST(Synth, Examples) {
  const auto r = synth_first_order(100, 20, 10, 1, 5, 0, 42);
  ASSERT_EQ(r.samples.size(), 5u);
  EXPECT_EQ(r.samples[0].y, 100.0);
  EXPECT_NEAR(r.samples[1].y, 92.386993, 5e-7);  // 20 + 80 e^{-0.1}
  for (std::size_t k = 0; k < 5; ++k)
    EXPECT_DOUBLE_EQ(r.samples[k].y, testkit::first_order(100, 20, 10, static_cast<double>(k)));

  const auto a = synth_first_order(100, 20, 10, 1, 50, 0.3, 7);
  const auto b = synth_first_order(100, 20, 10, 1, 50, 0.3, 7);
  const auto c = synth_first_order(100, 20, 10, 1, 50, 0.3, 8);
  EXPECT_EQ(ys(a), ys(b));
  EXPECT_NE(ys(a), ys(c));

  EXPECT_EQ(error_of([] { synth_first_order(100, 20, 0, 1, 5, 0, 0); }), Errc::InvalidParameters);
  EXPECT_EQ(error_of([] { synth_first_order(100, 20, 1, -1, 5, 0, 0); }), Errc::InvalidParameters);
  EXPECT_EQ(error_of([] { synth_first_order(100, 20, 1, 1, 2, 0, 0); }), Errc::InvalidParameters);
}

TEST(GenLvm, AnnexFirstRow) {
  std::vector<StepResponse> rs;
  for (double v : {23.4, 23.4, 23.6}) {
    StepResponse r;
    for (int k = 0; k < 3; ++k) r.samples.push_back({static_cast<double>(k), v});
    rs.push_back(r);
  }
  const GenHeader h{"Profesor", {2013, 2, 6}, *parse_time("17:49:40,8399038314819335937")};
  const auto doc = gen_lvm(rs, h);
  const std::string text = lvm::serialize_lvm(doc);
  EXPECT_NE(text.find("\n0,000000\t23,400000\t23,400000\t23,600000\n"), std::string::npos) << text;
  EXPECT_NE(text.find("Delta_X\t1,000000\t1,000000\t1,000000\n"), std::string::npos);
  EXPECT_NE(text.find("Operator\tProfesor\n"), std::string::npos);
  EXPECT_EQ(lvm::parse_lvm(text), doc);

  const auto one = gen_lvm(std::span(rs).first(1), h);
  EXPECT_EQ(one.segments[0].channels, 1);
  EXPECT_NE(lvm::serialize_lvm(one).find("Channels\t1\n"), std::string::npos);

  rs[1].samples[2].x = 2.5;
  EXPECT_EQ(error_of([&] { gen_lvm(rs, h); }), Errc::GridMismatch);
  EXPECT_EQ(error_of([&] { gen_lvm({}, h); }), Errc::InvalidParameters);
}

TEST(GenLvmProperty, SeriesSurviveToSixDecimals) {
  testkit::Gen g(23);
  for (int i = 0; i < 50; ++i) {
    std::vector<StepResponse> rs;
    const double dt = g.uniform(0.05, 2.0);
    const int channels = g.integer(1, 4);
    for (int c = 0; c < channels; ++c)
      rs.push_back(synth_first_order(g.uniform(50, 150), g.uniform(0, 40), g.uniform(1, 60), dt, 40,
                                     g.uniform(0, 0.2), g.bits()));
    const auto doc = lvm::parse_lvm(lvm::serialize_lvm(gen_lvm(rs, {"op", {2020, 1, 1}, {}})));
    for (int c = 0; c < channels; ++c) {
      const auto pts = lvm::channel_series(doc, 0, static_cast<std::size_t>(c));
      ASSERT_EQ(pts.size(), rs[static_cast<std::size_t>(c)].samples.size());
      for (std::size_t k = 0; k < pts.size(); ++k) {
        EXPECT_NEAR(pts[k].x, rs[static_cast<std::size_t>(c)].samples[k].x, 5e-7);
        EXPECT_NEAR(pts[k].y, rs[static_cast<std::size_t>(c)].samples[k].y, 5e-7);
      }
    }
  }
}
