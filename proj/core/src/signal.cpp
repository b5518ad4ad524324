#include "ieh/signal.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace ieh {

void validate(const VoltageSeries& v) {
  if (v.samples.empty()) {
    throw ConfigError("voltage series must contain at least one sample");
  }
  if (!(v.sample_rate > 0.0) || !std::isfinite(v.sample_rate)) {
    throw ConfigError("sample rate must be positive and finite");
  }
  for (double x : v.samples) {
    if (!std::isfinite(x)) {
      throw ConfigError("voltage series contains a non-finite sample");
    }
  }
}

double rms(const VoltageSeries& v) {
  validate(v);
  double acc = 0.0;
  for (double x : v.samples) {
    acc += x * x;
  }
  return std::sqrt(acc / static_cast<double>(v.samples.size()));
}

double dot(const VoltageSeries& a, const VoltageSeries& b) {
  if (a.samples.size() != b.samples.size()) {
    throw DimensionError("dot: series lengths differ (" + std::to_string(a.samples.size()) +
                         " vs " + std::to_string(b.samples.size()) + ")");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    acc += a.samples[i] * b.samples[i];
  }
  return acc;
}

void validate(const SyntheticSourceConfig& cfg) {
  const double nyquist = cfg.sample_rate / 2.0;
  if (!(cfg.sample_rate > 0.0)) {
    throw ConfigError("sample_rate must be positive");
  }
  if (!(cfg.f1 > 0.0) || cfg.f1 >= nyquist || !(cfg.f2 > 0.0) || cfg.f2 >= nyquist) {
    throw ConfigError("resonant frequencies must satisfy 0 < f < sample_rate/2");
  }
  if (!(cfg.zeta1 > 0.0) || cfg.zeta1 >= 1.0 || !(cfg.zeta2 > 0.0) || cfg.zeta2 >= 1.0) {
    throw ConfigError("damping ratios must lie in (0, 1)");
  }
  if (!(cfg.drive_bandwidth > 0.0)) {
    throw ConfigError("drive_bandwidth must be positive");
  }
  if (!(cfg.duration * cfg.sample_rate >= 2.0)) {
    throw ConfigError("duration * sample_rate must be at least 2 samples");
  }
  if (!std::isfinite(cfg.amp1) || !std::isfinite(cfg.amp2)) {
    throw ConfigError("output scales must be finite");
  }
}

namespace {

// Two-pole resonator with the discretized poles of a damped oscillator
// (radius exp(-zeta*w), angle w*sqrt(1-zeta^2)) and zeros at z = +-1,
// normalized to roughly unit gain at resonance.
class Resonator {
 public:
  Resonator(double freq_hz, double zeta, double sample_rate) {
    const double w = 2.0 * std::numbers::pi * freq_hz / sample_rate;
    const double r = std::exp(-zeta * w);
    a1_ = 2.0 * r * std::cos(w * std::sqrt(1.0 - zeta * zeta));
    a2_ = -r * r;
    b0_ = (1.0 - r * r) / 2.0;
  }

  double step(double x) {
    const double y = b0_ * (x - x2_) + a1_ * y1_ + a2_ * y2_;
    x2_ = x1_;
    x1_ = x;
    y2_ = y1_;
    y1_ = y;
    return y;
  }

 private:
  double a1_, a2_, b0_;
  double x1_ = 0.0, x2_ = 0.0;
  double y1_ = 0.0, y2_ = 0.0;
};

}  // namespace

std::pair<VoltageSeries, VoltageSeries> generate_synthetic(const SyntheticSourceConfig& cfg) {
  validate(cfg);
  const std::size_t n = static_cast<std::size_t>(std::llround(cfg.duration * cfg.sample_rate));

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // Shared drive: white Gaussian through a one-pole low-pass, rescaled to
  // unit steady-state variance.
  const double dt = 1.0 / cfg.sample_rate;
  const double alpha = 1.0 - std::exp(-2.0 * std::numbers::pi * cfg.drive_bandwidth * dt);
  const double drive_gain = std::sqrt((2.0 - alpha) / alpha);

  Resonator res1(cfg.f1, cfg.zeta1, cfg.sample_rate);
  Resonator res2(cfg.f2, cfg.zeta2, cfg.sample_rate);

  VoltageSeries v1, v2;
  v1.sample_rate = cfg.sample_rate;
  v2.sample_rate = cfg.sample_rate;
  v1.samples.resize(n);
  v2.samples.resize(n);

  double lp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    lp += alpha * (gauss(rng) - lp);
    const double u = drive_gain * lp;
    v1.samples[i] = cfg.amp1 * res1.step(u);
    v2.samples[i] = cfg.amp2 * res2.step(u);
  }
  return {std::move(v1), std::move(v2)};
}

VoltageSeries add_noise(const VoltageSeries& v, double snr, std::uint64_t seed) {
  validate(v);
  if (std::isinf(snr) && snr > 0.0) {
    return v;
  }
  if (!(snr > 0.0)) {
    throw ConfigError("snr must be a positive linear power ratio");
  }
  const double signal_rms = rms(v);
  if (!(signal_rms > 0.0)) {
    throw ConfigError("snr undefined for a zero-power signal");
  }
  const double sigma = signal_rms / std::sqrt(snr);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, sigma);

  VoltageSeries out = v;
  for (double& x : out.samples) {
    x += gauss(rng);
  }
  return out;
}

std::pair<VoltageSeries, VoltageSeries> split_train_test(const VoltageSeries& v, double fraction) {
  validate(v);
  if (!(fraction > 0.0) || !(fraction < 1.0)) {
    throw ConfigError("train fraction must lie strictly between 0 and 1");
  }
  const std::size_t d = v.samples.size();
  const auto n_train =
      static_cast<std::size_t>(std::floor(fraction * static_cast<double>(d) + 0.5));
  if (n_train == 0 || n_train >= d) {
    throw ConfigError("train fraction leaves an empty train or test part");
  }

  VoltageSeries train, test;
  train.sample_rate = v.sample_rate;
  test.sample_rate = v.sample_rate;
  train.samples.assign(v.samples.begin(), v.samples.begin() + static_cast<std::ptrdiff_t>(n_train));
  test.samples.assign(v.samples.begin() + static_cast<std::ptrdiff_t>(n_train), v.samples.end());
  return {std::move(train), std::move(test)};
}

}  // namespace ieh
