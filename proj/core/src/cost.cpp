#include "ieh/cost.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace ieh {

double positivity_cost(const VoltageSeries& v) {
  double acc = 0.0;
  for (double x : v.samples) {
    const double ax = std::abs(x);
    const double w = ax + x;  // exactly 0 for x < 0, exactly 2x otherwise
    acc += 4.0 * ax * ax - w * w;
  }
  return acc;
}

double rearrangement_bound(const VoltageSeries& v1, const VoltageSeries& v2) {
  if (v1.samples.size() != v2.samples.size()) {
    throw DimensionError("rearrangement_bound: series lengths differ");
  }
  std::vector<double> a(v1.samples.size()), b(v2.samples.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = std::abs(v1.samples[i]);
    b[i] = std::abs(v2.samples[i]);
  }
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());

  double cross = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cross += a[i] * b[i];
  }
  return dot(v1, v1) + dot(v2, v2) + 2.0 * cross;
}

double vrms_cost_pair(const VoltageSeries& v1, const VoltageSeries& v2,
                      const VoltageSeries& combined) {
  if (combined.samples.size() != v1.samples.size()) {
    throw DimensionError("vrms_cost_pair: combined length differs from inputs");
  }
  return rearrangement_bound(v1, v2) - dot(combined, combined);
}

double vrms_cost_single(const VoltageSeries& v, const VoltageSeries& transformed) {
  return dot(v, v) - dot(transformed, transformed);
}

CostBreakdown total_cost_single(const VoltageSeries& v, const InterventionParams& p) {
  return SingleCostEvaluator(v).evaluate(p);
}

CostBreakdown total_cost_pair(const VoltageSeries& v1, const VoltageSeries& v2,
                              const InterventionParams& p) {
  return PairCostEvaluator(v1, v2).evaluate(p);
}

PairCostEvaluator::PairCostEvaluator(VoltageSeries v1, VoltageSeries v2)
    : v1_(std::move(v1)), v2_(std::move(v2)), bound_(rearrangement_bound(v1_, v2_)) {
  validate(v1_);
  validate(v2_);
}

CostBreakdown PairCostEvaluator::evaluate(const InterventionParams& p) const {
  validate(p);
  const VoltageSeries shifted = cyclic_shift(v2_, p.phi);
  VoltageSeries sum = v1_;
  for (std::size_t i = 0; i < sum.samples.size(); ++i) {
    sum.samples[i] += shifted.samples[i];
  }
  const VoltageSeries combined = periodic_flip(sum, p.tau, p.flip_offset);

  CostBreakdown b;
  b.c_vrms = bound_ - dot(sum, sum);  // flip preserves the sum's norm
  b.c_pos = positivity_cost(combined);
  b.c_total = b.c_pos + b.c_vrms;
  b.vrms_out = rms(combined);
  b.vrms_max = std::sqrt(bound_ / static_cast<double>(sum.samples.size()));
  return b;
}

SingleCostEvaluator::SingleCostEvaluator(VoltageSeries v) : v_(std::move(v)) {
  validate(v_);
  input_norm_ = dot(v_, v_);
}

CostBreakdown SingleCostEvaluator::evaluate(const InterventionParams& p) const {
  validate(p);
  const VoltageSeries out = periodic_flip(v_, p.tau, p.flip_offset);

  CostBreakdown b;
  b.c_vrms = input_norm_ - dot(out, out);  // exactly zero: squares are unchanged
  b.c_pos = positivity_cost(out);
  b.c_total = b.c_pos + b.c_vrms;
  b.vrms_out = rms(out);
  b.vrms_max = std::sqrt(input_norm_ / static_cast<double>(v_.samples.size()));
  return b;
}

}  // namespace ieh
