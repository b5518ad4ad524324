#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ieh/cost.hpp"

namespace ieh {

/// Inclusive integer range for one search parameter.
struct ParamRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t width() const { return hi - lo + 1; }
};

/// Search box for (tau, phi, flip_offset).
struct ParamBounds {
  ParamRange tau{1, 128};
  ParamRange phi{0, 127};
  ParamRange flip_offset{0, 255};
};

void validate(const ParamBounds& b);

/// Continuous cost over (tau, phi); real interventions are evaluated by
/// rounding to the integer grid inside the callable.
using CostFn2 = std::function<double(double tau, double phi)>;
/// Continuous cost over (tau, phi, flip_offset).
using CostFn3 = std::function<double(double tau, double phi, double offset)>;

/// Round a continuous point onto the integer grid, clamped to bounds.
std::int64_t round_to_grid(double x, const ParamRange& r);
InterventionParams round_params(double tau, double phi, double offset,
                                const ParamBounds& b);

struct FiniteDiffGradient {
  double d_tau = 0.0;
  double d_phi = 0.0;
  bool clamped = false;  // a forward probe hit the bounds
};

/// Forward differences (C(tau+delta, phi) - C(tau, phi)) / delta in each
/// coordinate. Probes beyond the bounds are clamped onto them (shrinking the
/// effective step) and reported via the flag; a fully degenerate probe
/// yields a zero component.
FiniteDiffGradient finite_diff_gradient(const CostFn2& f, double tau, double phi,
                                        double delta, const ParamBounds& b);

struct TrajectoryPoint {
  std::int64_t iteration = 0;
  double cost = 0.0;  // best cost seen up to this iteration
};

struct GradientDescentConfig {
  double eta = 5.0;    // step size, samples^2 / volt^2
  double delta = 1.0;  // finite-difference probe, samples
  std::int64_t max_iters = 200;
  double tol = 1e-9;  // stop when the per-step improvement falls below this
  InterventionParams init{};  // flip_offset stays fixed during the descent
  ParamBounds bounds{};
};

void validate(const GradientDescentConfig& cfg);

struct GeneticConfig {
  std::int64_t population = 40;
  std::int64_t generations = 60;
  double mutation_rate = 0.2;
  double mutation_scale = 8.0;  // Gaussian sigma, samples
  double crossover_rate = 0.7;
  std::int64_t elitism = 2;
  std::int64_t tournament = 3;
  std::uint64_t seed = 1;
  ParamBounds bounds{};
};

void validate(const GeneticConfig& cfg);

/// Outcome of one search over intervention parameters.
struct SearchResult {
  InterventionParams best{};
  double cost = 0.0;
  std::vector<TrajectoryPoint> trajectory;
  std::int64_t evaluations = 0;
  bool converged = false;
};

/// Iterates the fixed-step rule (tau, phi) -= eta * grad with forward
/// differences, continuous state clamped to the bounds. Returns the best
/// point visited over all evaluations (including probes), not the final
/// iterate; ties resolve toward lexicographically smaller (tau, phi).
SearchResult gradient_descent(const CostFn2& f, const GradientDescentConfig& cfg);

/// Real-coded GA over (tau, phi, offset): tournament selection, uniform
/// crossover, Gaussian mutation rounded back to the grid, elitism.
/// Deterministic given the seed; returns the best of the final population.
SearchResult genetic_search(const CostFn3& f, const GeneticConfig& cfg);

/// Exhaustive scan of the bounds box; ties keep the lexicographically
/// smallest (tau, phi, offset).
SearchResult grid_search(const CostFn3& f, const ParamBounds& bounds);

struct LandscapePoint {
  std::int64_t tau = 0;
  std::int64_t phi = 0;
  double cost = 0.0;
};

/// Exhaustive c_total over the (tau, phi) grid at a fixed flip offset,
/// row-major with tau as the outer index. Pass v2 = nullptr for the
/// single-voltage pipeline (shift, then flip, applied to the one series).
std::vector<LandscapePoint> landscape_grid(const VoltageSeries& v1,
                                           const VoltageSeries* v2,
                                           const ParamRange& tau_range,
                                           const ParamRange& phi_range,
                                           std::int64_t flip_offset = 0);

enum class Method { GradientDescent, Genetic, Grid };

/// End-to-end training setup: contiguous train/test split plus the method
/// and its knobs. `bounds` is authoritative; it overrides the boxes inside
/// `gd`/`ga`, and single-voltage runs force phi to {0, 0}.
struct TrainConfig {
  Method method = Method::Genetic;
  double train_fraction = 0.8;
  ParamBounds bounds{};
  GradientDescentConfig gd{};
  GeneticConfig ga{};
};

void validate(const TrainConfig& cfg);

struct OptimizerReport {
  InterventionParams best{};
  CostBreakdown train_cost{};
  CostBreakdown test_cost{};
  std::vector<TrajectoryPoint> trajectory;
  std::int64_t evaluations = 0;
  std::uint64_t seed = 0;
  bool converged = false;
};

/// Optimizes on the train prefix, then re-evaluates the fixed best
/// parameters on the held-out suffix.
OptimizerReport train_and_test(const VoltageSeries& v1, const VoltageSeries* v2,
                               const TrainConfig& cfg);

}  // namespace ieh
