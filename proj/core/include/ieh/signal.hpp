#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ieh/errors.hpp"

namespace ieh {

/// Uniformly sampled voltage time series.
struct VoltageSeries {
  std::vector<double> samples;  // volts
  double sample_rate = 1.0;     // Hz, > 0

  std::size_t size() const { return samples.size(); }
};

/// Throws ConfigError unless the series is non-empty, all samples are finite
/// and the sample rate is positive.
void validate(const VoltageSeries& v);

/// sqrt((1/d) * sum v_i^2).
double rms(const VoltageSeries& v);

/// Dot product; throws DimensionError on length mismatch.
double dot(const VoltageSeries& a, const VoltageSeries& b);

/// Surrogate for a two-cantilever harvester: two damped second-order
/// resonators driven by one shared band-limited Gaussian excitation.
struct SyntheticSourceConfig {
  double f1 = 60.0;               // resonant frequency of channel 1, Hz
  double f2 = 120.0;              // resonant frequency of channel 2, Hz
  double zeta1 = 1e-4;            // damping ratio, in (0, 1)
  double zeta2 = 2e-4;
  double amp1 = 150.0;            // output scale, volts
  double amp2 = 150.0;
  double drive_bandwidth = 180.0; // one-pole low-pass cutoff of the drive, Hz
  double duration = 2.0;          // s
  double sample_rate = 1920.0;    // Hz; 60 Hz lines up with 32 samples/period
  std::uint64_t seed = 1;
};

void validate(const SyntheticSourceConfig& cfg);

/// Generates the two channel outputs. Deterministic for a given seed.
std::pair<VoltageSeries, VoltageSeries> generate_synthetic(const SyntheticSourceConfig& cfg);

/// Adds white Gaussian noise with variance rms(v)^2 / snr (snr is a linear
/// power ratio). snr = +infinity returns v unchanged. Throws ConfigError for
/// snr <= 0 or a zero-power signal.
VoltageSeries add_noise(const VoltageSeries& v, double snr, std::uint64_t seed);

/// Contiguous split: prefix of length round(fraction * d) (half rounds up)
/// is the train part, the remainder the test part. Throws ConfigError when
/// either part would be empty.
std::pair<VoltageSeries, VoltageSeries> split_train_test(const VoltageSeries& v, double fraction);

}  // namespace ieh
