#pragma once

#include "ieh/interventions.hpp"
#include "ieh/signal.hpp"

namespace ieh {

/// Cost of a pipeline output, split into its two terms. All costs are in
/// volts^2 with the factor d retained (d * Vrms^2 convention); divide by the
/// series length for per-sample reporting.
struct CostBreakdown {
  double c_pos = 0.0;     // positivity cost, >= 0
  double c_vrms = 0.0;    // distance of the combined energy from the bound
  double c_total = 0.0;   // c_pos + c_vrms
  double vrms_out = 0.0;  // rms of the pipeline output, volts
  double vrms_max = 0.0;  // rms corresponding to the bound, volts
};

/// Positivity cost 4<|V|,|V|> - <W,W> with W = |V| + V. Evaluated per
/// sample so the two products cancel exactly for nonnegative entries; the
/// result equals 4 * sum of squared negative samples and is zero iff the
/// series is nonnegative.
double positivity_cost(const VoltageSeries& v);

/// Largest combined squared norm reachable with sign flips and permutations:
/// <v1,v1> + <v2,v2> + 2 * <sorted_desc(|v1|), sorted_desc(|v2|)>. Equals
/// d * vrms_max^2.
double rearrangement_bound(const VoltageSeries& v1, const VoltageSeries& v2);

/// rearrangement_bound(v1, v2) - <combined, combined>.
double vrms_cost_pair(const VoltageSeries& v1, const VoltageSeries& v2,
                      const VoltageSeries& combined);

/// <v, v> - <transformed, transformed>; zero for any orthogonal transform.
double vrms_cost_single(const VoltageSeries& v, const VoltageSeries& transformed);

/// Single channel: flip, then score. The vrms term vanishes by
/// orthogonality, so only the positivity term can be nonzero.
CostBreakdown total_cost_single(const VoltageSeries& v, const InterventionParams& p);

/// Two channels: shift v2, sum, flip. The vrms term compares the pre-flip
/// sum against the rearrangement bound (the flip cannot change it); the
/// positivity term scores the flipped combined output.
CostBreakdown total_cost_pair(const VoltageSeries& v1, const VoltageSeries& v2,
                              const InterventionParams& p);

/// Caches the rearrangement bound of a fixed pair so repeated parameter
/// evaluations stay O(d).
class PairCostEvaluator {
 public:
  PairCostEvaluator(VoltageSeries v1, VoltageSeries v2);

  CostBreakdown evaluate(const InterventionParams& p) const;
  double bound() const { return bound_; }
  std::size_t size() const { return v1_.samples.size(); }

 private:
  VoltageSeries v1_, v2_;
  double bound_;
};

/// Single-channel counterpart; caches the input norm.
class SingleCostEvaluator {
 public:
  explicit SingleCostEvaluator(VoltageSeries v);

  CostBreakdown evaluate(const InterventionParams& p) const;
  std::size_t size() const { return v_.samples.size(); }

 private:
  VoltageSeries v_;
  double input_norm_;
};

}  // namespace ieh
