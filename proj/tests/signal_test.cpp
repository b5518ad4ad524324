#include "ieh/signal.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace ieh {
namespace {

VoltageSeries series(std::vector<double> samples, double rate = 1.0) {
  VoltageSeries v;
  v.samples = std::move(samples);
  v.sample_rate = rate;
  return v;
}

TEST(Rms, HandValue) {
  // sqrt((3^2 + 4^2) / 2) = sqrt(12.5)
  EXPECT_DOUBLE_EQ(rms(series({3.0, -4.0})), std::sqrt(12.5));
}

TEST(Rms, SingleSample) {
  EXPECT_DOUBLE_EQ(rms(series({-7.0})), 7.0);
}

TEST(Rms, MatchesDotDefinition) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int rep = 0; rep < 50; ++rep) {
    VoltageSeries v;
    const std::size_t d = 1 + rng() % 64;
    for (std::size_t i = 0; i < d; ++i) v.samples.push_back(u(rng));
    const double r = rms(v);
    EXPECT_NEAR(r * r * static_cast<double>(d), dot(v, v), 1e-12 * dot(v, v));
  }
}

TEST(Rms, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(rms(series({})), ConfigError);
  EXPECT_THROW(rms(series({1.0, std::nan("")})), ConfigError);
  VoltageSeries bad_rate = series({1.0});
  bad_rate.sample_rate = 0.0;
  EXPECT_THROW(rms(bad_rate), ConfigError);
}

TEST(Dot, HandValue) {
  EXPECT_DOUBLE_EQ(dot(series({1.0, 2.0}), series({3.0, 4.0})), 11.0);
}

TEST(Dot, LengthMismatchThrows) {
  EXPECT_THROW(dot(series({1.0}), series({1.0, 2.0})), DimensionError);
}

TEST(Split, EightyTwenty) {
  const auto [train, test] = split_train_test(series({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}), 0.8);
  EXPECT_EQ(train.size(), 8u);
  EXPECT_EQ(test.size(), 2u);
  EXPECT_DOUBLE_EQ(train.samples.front(), 0.0);
  EXPECT_DOUBLE_EQ(train.samples.back(), 7.0);
  EXPECT_DOUBLE_EQ(test.samples.front(), 8.0);
  EXPECT_DOUBLE_EQ(test.samples.back(), 9.0);
}

TEST(Split, HalfRoundsUp) {
  // 0.5 * 5 = 2.5 -> train gets 3
  const auto [train, test] = split_train_test(series({1, 2, 3, 4, 5}), 0.5);
  EXPECT_EQ(train.size(), 3u);
  EXPECT_EQ(test.size(), 2u);
}

TEST(Split, PreservesSampleRate) {
  const auto [train, test] = split_train_test(series({1, 2, 3, 4}, 100.0), 0.5);
  EXPECT_DOUBLE_EQ(train.sample_rate, 100.0);
  EXPECT_DOUBLE_EQ(test.sample_rate, 100.0);
}

TEST(Split, RejectsEmptyParts) {
  EXPECT_THROW(split_train_test(series({1.0, 2.0}), 0.95), ConfigError);  // empty test
  EXPECT_THROW(split_train_test(series({1.0, 2.0}), 0.05), ConfigError);  // empty train
  EXPECT_THROW(split_train_test(series({1.0, 2.0}), 0.0), ConfigError);
  EXPECT_THROW(split_train_test(series({1.0, 2.0}), 1.0), ConfigError);
}

TEST(Synthetic, DeterministicForFixedSeed) {
  SyntheticSourceConfig cfg;
  cfg.duration = 0.25;
  const auto [a1, a2] = generate_synthetic(cfg);
  const auto [b1, b2] = generate_synthetic(cfg);
  EXPECT_EQ(a1.samples, b1.samples);
  EXPECT_EQ(a2.samples, b2.samples);
}

TEST(Synthetic, SeedChangesOutput) {
  SyntheticSourceConfig cfg;
  cfg.duration = 0.25;
  const auto [a1, a2] = generate_synthetic(cfg);
  cfg.seed = 2;
  const auto [b1, b2] = generate_synthetic(cfg);
  EXPECT_NE(a1.samples, b1.samples);
}

TEST(Synthetic, LengthAndRate) {
  SyntheticSourceConfig cfg;
  cfg.duration = 0.5;
  const auto [v1, v2] = generate_synthetic(cfg);
  EXPECT_EQ(v1.size(), static_cast<std::size_t>(std::llround(0.5 * cfg.sample_rate)));
  EXPECT_EQ(v1.size(), v2.size());
  EXPECT_DOUBLE_EQ(v1.sample_rate, cfg.sample_rate);
  EXPECT_GT(rms(v1), 0.0);
  EXPECT_GT(rms(v2), 0.0);
}

TEST(Synthetic, ChannelsShareTheDrive) {
  // Different resonators, same excitation: channels must differ but both
  // must carry energy from the common drive.
  SyntheticSourceConfig cfg;
  cfg.duration = 0.25;
  const auto [v1, v2] = generate_synthetic(cfg);
  EXPECT_NE(v1.samples, v2.samples);
}

TEST(Synthetic, ConfigValidation) {
  SyntheticSourceConfig cfg;
  cfg.f1 = 1000.0;  // >= nyquist of 960
  EXPECT_THROW(generate_synthetic(cfg), ConfigError);
  cfg = {};
  cfg.zeta1 = 0.0;
  EXPECT_THROW(generate_synthetic(cfg), ConfigError);
  cfg = {};
  cfg.duration = 1e-4;  // fewer than 2 samples
  EXPECT_THROW(generate_synthetic(cfg), ConfigError);
}

TEST(AddNoise, DeterministicForFixedSeed) {
  const VoltageSeries v = series({1.0, -2.0, 3.0, -4.0});
  const VoltageSeries a = add_noise(v, 10.0, 42);
  const VoltageSeries b = add_noise(v, 10.0, 42);
  EXPECT_EQ(a.samples, b.samples);
  EXPECT_NE(a.samples, v.samples);
}

TEST(AddNoise, InfiniteSnrIsIdentity) {
  const VoltageSeries v = series({1.0, -2.0, 3.0});
  const VoltageSeries out = add_noise(v, std::numeric_limits<double>::infinity(), 7);
  EXPECT_EQ(out.samples, v.samples);
}

TEST(AddNoise, PowerRatioIsLinear) {
  // Noise power should be signal power / snr; check on a long series.
  VoltageSeries v;
  v.samples.assign(100000, 0.0);
  for (std::size_t i = 0; i < v.samples.size(); ++i) {
    v.samples[i] = 2.0 * std::sin(0.1 * static_cast<double>(i));
  }
  const double snr = 5.0;
  const VoltageSeries noisy = add_noise(v, snr, 3);
  double noise_power = 0.0;
  for (std::size_t i = 0; i < v.samples.size(); ++i) {
    const double e = noisy.samples[i] - v.samples[i];
    noise_power += e * e;
  }
  noise_power /= static_cast<double>(v.samples.size());
  const double signal_power = rms(v) * rms(v);
  EXPECT_NEAR(noise_power, signal_power / snr, 0.05 * signal_power / snr);
}

TEST(AddNoise, RejectsBadSnr) {
  const VoltageSeries v = series({1.0, 2.0});
  EXPECT_THROW(add_noise(v, 0.0, 1), ConfigError);
  EXPECT_THROW(add_noise(v, -1.0, 1), ConfigError);
  EXPECT_THROW(add_noise(series({0.0, 0.0}), 5.0, 1), ConfigError);
}

}  // namespace
}  // namespace ieh
