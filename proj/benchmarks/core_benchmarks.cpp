#include <benchmark/benchmark.h>

#include <random>

#include "ieh/cost.hpp"
#include "ieh/diode.hpp"
#include "ieh/interventions.hpp"
#include "ieh/optimize.hpp"
#include "ieh/signal.hpp"

namespace {

ieh::VoltageSeries random_series(std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  ieh::VoltageSeries v;
  v.samples.reserve(d);
  for (std::size_t i = 0; i < d; ++i) v.samples.push_back(u(rng));
  return v;
}

void BM_Rms(benchmark::State& state) {
  const ieh::VoltageSeries v = random_series(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ieh::rms(v));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Rms)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

void BM_PeriodicFlip(benchmark::State& state) {
  const ieh::VoltageSeries v = random_series(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ieh::periodic_flip(v, 16, 5));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PeriodicFlip)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

void BM_CyclicShift(benchmark::State& state) {
  const ieh::VoltageSeries v = random_series(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ieh::cyclic_shift(v, 37));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CyclicShift)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

void BM_PositivityCost(benchmark::State& state) {
  const ieh::VoltageSeries v = random_series(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ieh::positivity_cost(v));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PositivityCost)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

void BM_RearrangementBound(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const ieh::VoltageSeries v1 = random_series(d, 5);
  const ieh::VoltageSeries v2 = random_series(d, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ieh::rearrangement_bound(v1, v2));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RearrangementBound)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

void BM_PairEvaluate(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const ieh::PairCostEvaluator eval(random_series(d, 7), random_series(d, 8));
  std::int64_t phi = 0;
  for (auto _ : state) {
    phi = (phi + 1) % 64;
    benchmark::DoNotOptimize(eval.evaluate({16, phi, 3}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PairEvaluate)->Arg(1 << 10)->Arg(1 << 14);

void BM_BridgeRectify(benchmark::State& state) {
  const ieh::VoltageSeries v = random_series(static_cast<std::size_t>(state.range(0)), 9);
  const ieh::DiodeBridgeParams p{};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ieh::bridge_rectify(v, p));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BridgeRectify)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

void BM_GridSearchSmall(benchmark::State& state) {
  const ieh::PairCostEvaluator eval(random_series(512, 10), random_series(512, 11));
  ieh::ParamBounds bounds;
  bounds.tau = {1, 16};
  bounds.phi = {0, 15};
  bounds.flip_offset = {0, 3};
  const ieh::CostFn3 f = [&](double t, double p, double o) {
    return eval.evaluate(ieh::round_params(t, p, o, bounds)).c_total;
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(ieh::grid_search(f, bounds));
  }
}
BENCHMARK(BM_GridSearchSmall)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
