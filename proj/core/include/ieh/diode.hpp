#pragma once

#include <optional>
#include <string>

#include "ieh/signal.hpp"

namespace ieh {

/// Linearized diode model V = v0 + I*r while conducting, in a full-wave
/// bridge (two diodes per path) with a purely resistive load.
struct DiodeBridgeParams {
  double v0 = 0.1;      // forward drop intercept, volts
  double r = 1.0;       // diode incremental resistance, ohms
  double r_load = 8.0;  // load resistance, ohms
  double v_th = 0.03;   // thermal voltage, volts; sanity bound for v0
};

/// Throws ConfigError on invalid values. Returns a warning message when
/// v0 < v_th (a diode cannot rectify below the thermal voltage), otherwise
/// std::nullopt.
std::optional<std::string> validate(const DiodeBridgeParams& p);

struct BridgeOutput {
  VoltageSeries load_voltage;  // I * r_load per sample, nonnegative
  VoltageSeries dissipation;   // 2 * (I*v0 + I^2*r) per sample, watts
};

/// Samplewise conduction: I = max(0, (|v| - 2*v0) / (r_load + 2*r)).
BridgeOutput bridge_rectify(const VoltageSeries& v, const DiodeBridgeParams& p);

/// Rectifies each source separately, then sums the load voltages.
VoltageSeries bridge_per_source_then_sum(const VoltageSeries& v1, const VoltageSeries& v2,
                                         const DiodeBridgeParams& p);

/// Mean of the bridge dissipation series.
double average_dissipation(const VoltageSeries& v, const DiodeBridgeParams& p);

}  // namespace ieh
