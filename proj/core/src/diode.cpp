#include "ieh/diode.hpp"

#include <cmath>

namespace ieh {

std::optional<std::string> validate(const DiodeBridgeParams& p) {
  if (!(p.r_load > 0.0)) {
    throw ConfigError("r_load must be positive");
  }
  if (p.v0 < 0.0 || p.r < 0.0) {
    throw ConfigError("v0 and r must be nonnegative");
  }
  if (p.v0 < p.v_th) {
    return "diode forward drop v0 < thermal voltage v_th (" + std::to_string(p.v0) + " < " +
           std::to_string(p.v_th) + "); a physical diode cannot rectify in this regime";
  }
  return std::nullopt;
}

BridgeOutput bridge_rectify(const VoltageSeries& v, const DiodeBridgeParams& p) {
  validate(p);
  BridgeOutput out;
  out.load_voltage.sample_rate = v.sample_rate;
  out.dissipation.sample_rate = v.sample_rate;
  out.load_voltage.samples.resize(v.samples.size());
  out.dissipation.samples.resize(v.samples.size());

  const double series_r = p.r_load + 2.0 * p.r;
  for (std::size_t i = 0; i < v.samples.size(); ++i) {
    const double drive = std::abs(v.samples[i]) - 2.0 * p.v0;
    const double current = drive > 0.0 ? drive / series_r : 0.0;
    out.load_voltage.samples[i] = current * p.r_load;
    out.dissipation.samples[i] = 2.0 * (current * p.v0 + current * current * p.r);
  }
  return out;
}

VoltageSeries bridge_per_source_then_sum(const VoltageSeries& v1, const VoltageSeries& v2,
                                         const DiodeBridgeParams& p) {
  if (v1.samples.size() != v2.samples.size()) {
    throw DimensionError("bridge_per_source_then_sum: channel lengths differ");
  }
  VoltageSeries out = bridge_rectify(v1, p).load_voltage;
  const VoltageSeries second = bridge_rectify(v2, p).load_voltage;
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    out.samples[i] += second.samples[i];
  }
  return out;
}

double average_dissipation(const VoltageSeries& v, const DiodeBridgeParams& p) {
  const BridgeOutput out = bridge_rectify(v, p);
  double acc = 0.0;
  for (double w : out.dissipation.samples) {
    acc += w;
  }
  return v.samples.empty() ? 0.0 : acc / static_cast<double>(v.samples.size());
}

}  // namespace ieh
