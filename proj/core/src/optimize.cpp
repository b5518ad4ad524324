#include "ieh/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <tuple>
#include <utility>

namespace ieh {

namespace {

double clamp_continuous(double x, const ParamRange& r) {
  return std::min(std::max(x, static_cast<double>(r.lo)), static_cast<double>(r.hi));
}

bool lex_less(const InterventionParams& a, const InterventionParams& b) {
  return std::tie(a.tau, a.phi, a.flip_offset) < std::tie(b.tau, b.phi, b.flip_offset);
}

/// Best-visited tracker; ties go to the lexicographically smaller point.
struct BestPoint {
  bool set = false;
  double cost = 0.0;
  InterventionParams params{};

  void consider(double c, const InterventionParams& p) {
    if (!set || c < cost || (c == cost && lex_less(p, params))) {
      set = true;
      cost = c;
      params = p;
    }
  }
};

}  // namespace

void validate(const ParamBounds& b) {
  if (b.tau.lo > b.tau.hi || b.phi.lo > b.phi.hi ||
      b.flip_offset.lo > b.flip_offset.hi) {
    throw ConfigError("parameter bounds: lo must not exceed hi");
  }
  if (b.tau.lo < 1) throw ConfigError("parameter bounds: tau must start at >= 1");
  if (b.phi.lo < 0 || b.flip_offset.lo < 0) {
    throw ConfigError("parameter bounds: phi and flip offset must be >= 0");
  }
}

std::int64_t round_to_grid(double x, const ParamRange& r) {
  const std::int64_t v = std::llround(x);
  return std::min(std::max(v, r.lo), r.hi);
}

InterventionParams round_params(double tau, double phi, double offset,
                                const ParamBounds& b) {
  InterventionParams p;
  p.tau = round_to_grid(tau, b.tau);
  p.phi = round_to_grid(phi, b.phi);
  p.flip_offset = round_to_grid(offset, b.flip_offset);
  return p;
}

FiniteDiffGradient finite_diff_gradient(const CostFn2& f, double tau, double phi,
                                        double delta, const ParamBounds& b) {
  if (delta <= 0.0) throw ConfigError("finite differences need delta > 0");

  FiniteDiffGradient g;
  const double base = f(tau, phi);

  double t1 = tau + delta;
  if (t1 > static_cast<double>(b.tau.hi)) {
    t1 = static_cast<double>(b.tau.hi);
    g.clamped = true;
  }
  g.d_tau = t1 > tau ? (f(t1, phi) - base) / (t1 - tau) : 0.0;

  double p1 = phi + delta;
  if (p1 > static_cast<double>(b.phi.hi)) {
    p1 = static_cast<double>(b.phi.hi);
    g.clamped = true;
  }
  g.d_phi = p1 > phi ? (f(tau, p1) - base) / (p1 - phi) : 0.0;
  return g;
}

void validate(const GradientDescentConfig& cfg) {
  if (cfg.eta <= 0.0 || cfg.delta <= 0.0) {
    throw ConfigError("gradient descent needs eta > 0 and delta > 0");
  }
  if (cfg.max_iters < 1) throw ConfigError("gradient descent needs max_iters >= 1");
  if (cfg.tol < 0.0) throw ConfigError("gradient descent needs tol >= 0");
  validate(cfg.bounds);
}

SearchResult gradient_descent(const CostFn2& f, const GradientDescentConfig& cfg) {
  validate(cfg);

  SearchResult res;
  BestPoint best;
  const std::int64_t offset = std::min(
      std::max(cfg.init.flip_offset, cfg.bounds.flip_offset.lo), cfg.bounds.flip_offset.hi);

  const CostFn2 tracked = [&](double t, double p) {
    const double c = f(t, p);
    ++res.evaluations;
    best.consider(c, round_params(t, p, static_cast<double>(offset), cfg.bounds));
    return c;
  };

  double t = clamp_continuous(static_cast<double>(cfg.init.tau), cfg.bounds.tau);
  double p = clamp_continuous(static_cast<double>(cfg.init.phi), cfg.bounds.phi);
  double current = tracked(t, p);
  res.trajectory.push_back({0, best.cost});

  for (std::int64_t it = 1; it <= cfg.max_iters; ++it) {
    const FiniteDiffGradient g = finite_diff_gradient(tracked, t, p, cfg.delta, cfg.bounds);
    t = clamp_continuous(t - cfg.eta * g.d_tau, cfg.bounds.tau);
    p = clamp_continuous(p - cfg.eta * g.d_phi, cfg.bounds.phi);

    const double next = tracked(t, p);
    const double improvement = current - next;
    current = next;
    res.trajectory.push_back({it, best.cost});
    if (improvement < cfg.tol) {
      res.converged = true;
      break;
    }
  }

  res.best = best.params;
  res.cost = best.cost;
  return res;
}

void validate(const GeneticConfig& cfg) {
  if (cfg.population < 2) throw ConfigError("GA needs population >= 2");
  if (cfg.generations < 1) throw ConfigError("GA needs generations >= 1");
  if (cfg.mutation_rate < 0.0 || cfg.mutation_rate > 1.0 ||
      cfg.crossover_rate < 0.0 || cfg.crossover_rate > 1.0) {
    throw ConfigError("GA rates must lie in [0, 1]");
  }
  if (cfg.mutation_scale <= 0.0) throw ConfigError("GA needs mutation_scale > 0");
  if (cfg.elitism < 1 || cfg.elitism >= cfg.population) {
    throw ConfigError("GA needs 1 <= elitism < population");
  }
  if (cfg.tournament < 1) throw ConfigError("GA needs tournament >= 1");
  validate(cfg.bounds);
}

namespace {

struct Individual {
  std::array<double, 3> genes{};  // tau, phi, flip_offset; integer-valued
  double cost = 0.0;
};

bool indiv_less(const Individual& a, const Individual& b) {
  return std::tie(a.cost, a.genes[0], a.genes[1], a.genes[2]) <
         std::tie(b.cost, b.genes[0], b.genes[1], b.genes[2]);
}

InterventionParams indiv_params(const Individual& in) {
  InterventionParams p;
  p.tau = static_cast<std::int64_t>(in.genes[0]);
  p.phi = static_cast<std::int64_t>(in.genes[1]);
  p.flip_offset = static_cast<std::int64_t>(in.genes[2]);
  return p;
}

}  // namespace

SearchResult genetic_search(const CostFn3& f, const GeneticConfig& cfg) {
  validate(cfg);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::int64_t> init_tau(cfg.bounds.tau.lo, cfg.bounds.tau.hi);
  std::uniform_int_distribution<std::int64_t> init_phi(cfg.bounds.phi.lo, cfg.bounds.phi.hi);
  std::uniform_int_distribution<std::int64_t> init_off(cfg.bounds.flip_offset.lo,
                                                       cfg.bounds.flip_offset.hi);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::normal_distribution<double> jitter(0.0, cfg.mutation_scale);

  SearchResult res;
  const auto eval = [&](Individual& in) {
    in.cost = f(in.genes[0], in.genes[1], in.genes[2]);
    ++res.evaluations;
  };

  std::vector<Individual> pop(static_cast<std::size_t>(cfg.population));
  for (Individual& in : pop) {
    in.genes = {static_cast<double>(init_tau(rng)), static_cast<double>(init_phi(rng)),
                static_cast<double>(init_off(rng))};
    eval(in);
  }

  const auto best_of = [](const std::vector<Individual>& v) {
    return *std::min_element(v.begin(), v.end(), indiv_less);
  };
  res.trajectory.push_back({0, best_of(pop).cost});

  std::uniform_int_distribution<std::size_t> pick_index(0, pop.size() - 1);
  const auto tournament_pick = [&]() -> const Individual& {
    const Individual* winner = &pop[pick_index(rng)];
    for (std::int64_t k = 1; k < cfg.tournament; ++k) {
      const Individual* challenger = &pop[pick_index(rng)];
      if (indiv_less(*challenger, *winner)) winner = challenger;
    }
    return *winner;
  };

  for (std::int64_t gen = 1; gen <= cfg.generations; ++gen) {
    std::vector<Individual> ranked = pop;
    std::sort(ranked.begin(), ranked.end(), indiv_less);

    std::vector<Individual> next(ranked.begin(), ranked.begin() + cfg.elitism);
    next.reserve(pop.size());
    while (next.size() < pop.size()) {
      const Individual& pa = tournament_pick();
      const Individual& pb = tournament_pick();
      Individual child = pa;
      if (coin(rng) < cfg.crossover_rate) {
        for (int k = 0; k < 3; ++k) {
          if (coin(rng) < 0.5) child.genes[k] = pb.genes[k];
        }
      }
      for (int k = 0; k < 3; ++k) {
        if (coin(rng) < cfg.mutation_rate) child.genes[k] += jitter(rng);
      }
      child.genes[0] = static_cast<double>(round_to_grid(child.genes[0], cfg.bounds.tau));
      child.genes[1] = static_cast<double>(round_to_grid(child.genes[1], cfg.bounds.phi));
      child.genes[2] =
          static_cast<double>(round_to_grid(child.genes[2], cfg.bounds.flip_offset));
      eval(child);
      next.push_back(child);
    }

    pop = std::move(next);
    res.trajectory.push_back({gen, best_of(pop).cost});
  }

  const Individual winner = best_of(pop);
  res.best = indiv_params(winner);
  res.cost = winner.cost;
  res.converged = true;
  return res;
}

SearchResult grid_search(const CostFn3& f, const ParamBounds& bounds) {
  validate(bounds);

  SearchResult res;
  bool have_best = false;
  for (std::int64_t tau = bounds.tau.lo; tau <= bounds.tau.hi; ++tau) {
    for (std::int64_t phi = bounds.phi.lo; phi <= bounds.phi.hi; ++phi) {
      for (std::int64_t off = bounds.flip_offset.lo; off <= bounds.flip_offset.hi; ++off) {
        const double c = f(static_cast<double>(tau), static_cast<double>(phi),
                           static_cast<double>(off));
        ++res.evaluations;
        if (!have_best || c < res.cost) {
          have_best = true;
          res.cost = c;
          res.best = InterventionParams{tau, phi, off};
          res.trajectory.push_back({res.evaluations, c});
        }
      }
    }
  }
  res.converged = true;
  return res;
}

std::vector<LandscapePoint> landscape_grid(const VoltageSeries& v1,
                                           const VoltageSeries* v2,
                                           const ParamRange& tau_range,
                                           const ParamRange& phi_range,
                                           std::int64_t flip_offset) {
  ParamBounds box;
  box.tau = tau_range;
  box.phi = phi_range;
  box.flip_offset = {flip_offset, flip_offset};
  validate(box);

  std::vector<LandscapePoint> grid;
  grid.reserve(static_cast<std::size_t>(tau_range.width() * phi_range.width()));

  if (v2 != nullptr) {
    const PairCostEvaluator eval(v1, *v2);
    for (std::int64_t tau = tau_range.lo; tau <= tau_range.hi; ++tau) {
      for (std::int64_t phi = phi_range.lo; phi <= phi_range.hi; ++phi) {
        const CostBreakdown b = eval.evaluate({tau, phi, flip_offset});
        grid.push_back({tau, phi, b.c_total});
      }
    }
    return grid;
  }

  validate(v1);
  for (std::int64_t tau = tau_range.lo; tau <= tau_range.hi; ++tau) {
    for (std::int64_t phi = phi_range.lo; phi <= phi_range.hi; ++phi) {
      const VoltageSeries out =
          periodic_flip(cyclic_shift(v1, phi), tau, flip_offset);
      grid.push_back({tau, phi, positivity_cost(out)});  // the vrms term is 0
    }
  }
  return grid;
}

void validate(const TrainConfig& cfg) {
  if (!(cfg.train_fraction > 0.0 && cfg.train_fraction < 1.0)) {
    throw ConfigError("train fraction must lie strictly between 0 and 1");
  }
  validate(cfg.bounds);
  validate(cfg.gd);
  validate(cfg.ga);
}

namespace {

SearchResult run_search(const std::function<double(const InterventionParams&)>& cost,
                        const TrainConfig& cfg, const ParamBounds& bounds) {
  switch (cfg.method) {
    case Method::GradientDescent: {
      GradientDescentConfig gd = cfg.gd;
      gd.bounds = bounds;
      gd.init.flip_offset = std::min(std::max(gd.init.flip_offset, bounds.flip_offset.lo),
                                     bounds.flip_offset.hi);
      const double off = static_cast<double>(gd.init.flip_offset);
      const CostFn2 f2 = [&cost, &bounds, off](double t, double p) {
        return cost(round_params(t, p, off, bounds));
      };
      return gradient_descent(f2, gd);
    }
    case Method::Genetic: {
      GeneticConfig ga = cfg.ga;
      ga.bounds = bounds;
      const CostFn3 f3 = [&cost, &bounds](double t, double p, double o) {
        return cost(round_params(t, p, o, bounds));
      };
      return genetic_search(f3, ga);
    }
    case Method::Grid: {
      const CostFn3 f3 = [&cost, &bounds](double t, double p, double o) {
        return cost(round_params(t, p, o, bounds));
      };
      return grid_search(f3, bounds);
    }
  }
  throw ConfigError("unknown optimization method");
}

}  // namespace

OptimizerReport train_and_test(const VoltageSeries& v1, const VoltageSeries* v2,
                               const TrainConfig& cfg) {
  validate(cfg);

  ParamBounds bounds = cfg.bounds;
  if (v2 == nullptr) bounds.phi = {0, 0};  // a lone series gains nothing from delay

  OptimizerReport rep;
  rep.seed = cfg.ga.seed;

  const auto finish = [&](const SearchResult& r, const auto& train_eval,
                          const auto& test_eval) {
    rep.best = r.best;
    rep.trajectory = r.trajectory;
    rep.evaluations = r.evaluations;
    rep.converged = r.converged;
    rep.train_cost = train_eval.evaluate(rep.best);
    rep.test_cost = test_eval.evaluate(rep.best);
  };

  const auto [train1, test1] = split_train_test(v1, cfg.train_fraction);
  if (v2 != nullptr) {
    const auto [train2, test2] = split_train_test(*v2, cfg.train_fraction);
    const PairCostEvaluator train_eval(train1, train2);
    const PairCostEvaluator test_eval(test1, test2);
    const SearchResult r = run_search(
        [&](const InterventionParams& p) { return train_eval.evaluate(p).c_total; }, cfg,
        bounds);
    finish(r, train_eval, test_eval);
  } else {
    const SingleCostEvaluator train_eval(train1);
    const SingleCostEvaluator test_eval(test1);
    const SearchResult r = run_search(
        [&](const InterventionParams& p) { return train_eval.evaluate(p).c_total; }, cfg,
        bounds);
    finish(r, train_eval, test_eval);
  }
  return rep;
}

}  // namespace ieh
