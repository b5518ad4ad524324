#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ieh/csv.hpp"
#include "ieh/pipeline.hpp"

namespace {

constexpr int kExitOther = 1;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitIo = 4;

struct TrainFlags {
  std::string method = "ga";
  double train_frac = 0.8;
  std::uint64_t seed = 1;
  std::int64_t tau_min = 1, tau_max = 128;
  std::int64_t phi_min = 0, phi_max = 127;
  std::int64_t offset_min = 0, offset_max = 255;
  // genetic algorithm
  std::int64_t population = 40, generations = 60, elitism = 2, tournament = 3;
  double mutation_rate = 0.2, mutation_scale = 8.0, crossover_rate = 0.7;
  // gradient descent
  double eta = 5.0, delta = 1.0, tol = 1e-9;
  std::int64_t max_iters = 200;
  std::int64_t init_tau = 1, init_phi = 0, init_offset = 0;
};

struct DiodeFlags {
  double v0 = 0.1;
  double r = 1.0;
  double r_load = 8.0;
};

void add_train_flags(CLI::App* cmd, TrainFlags& f) {
  cmd->add_option("--method", f.method, "Training method")
      ->check(CLI::IsMember({"gd", "ga", "grid"}))
      ->capture_default_str();
  cmd->add_option("--train-frac", f.train_frac, "Train split fraction")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--tau-min", f.tau_min, "Smallest flip period")->capture_default_str();
  cmd->add_option("--tau-max", f.tau_max, "Largest flip period")->capture_default_str();
  cmd->add_option("--phi-min", f.phi_min, "Smallest delay")->capture_default_str();
  cmd->add_option("--phi-max", f.phi_max, "Largest delay")->capture_default_str();
  cmd->add_option("--offset-min", f.offset_min, "Smallest flip offset")
      ->capture_default_str();
  cmd->add_option("--offset-max", f.offset_max, "Largest flip offset")
      ->capture_default_str();
  cmd->add_option("--population", f.population, "GA population size")
      ->capture_default_str();
  cmd->add_option("--generations", f.generations, "GA generations")->capture_default_str();
  cmd->add_option("--mutation-rate", f.mutation_rate, "GA per-gene mutation probability")
      ->capture_default_str();
  cmd->add_option("--mutation-scale", f.mutation_scale, "GA mutation sigma, samples")
      ->capture_default_str();
  cmd->add_option("--crossover-rate", f.crossover_rate, "GA crossover probability")
      ->capture_default_str();
  cmd->add_option("--elitism", f.elitism, "GA elite count")->capture_default_str();
  cmd->add_option("--tournament", f.tournament, "GA tournament size")
      ->capture_default_str();
  cmd->add_option("--eta", f.eta, "GD step size")->capture_default_str();
  cmd->add_option("--delta", f.delta, "GD finite-difference probe")->capture_default_str();
  cmd->add_option("--max-iters", f.max_iters, "GD iteration cap")->capture_default_str();
  cmd->add_option("--tol", f.tol, "GD improvement tolerance")->capture_default_str();
  cmd->add_option("--init-tau", f.init_tau, "GD initial tau")->capture_default_str();
  cmd->add_option("--init-phi", f.init_phi, "GD initial phi")->capture_default_str();
  cmd->add_option("--init-offset", f.init_offset, "GD flip offset (fixed)")
      ->capture_default_str();
}

void add_diode_flags(CLI::App* cmd, DiodeFlags& f) {
  cmd->add_option("--diode-v0", f.v0, "Diode forward drop, volts")->capture_default_str();
  cmd->add_option("--diode-r", f.r, "Diode resistance, ohms")->capture_default_str();
  cmd->add_option("--load-r", f.r_load, "Load resistance, ohms")->capture_default_str();
}

ieh::TrainConfig to_train_config(const TrainFlags& f) {
  ieh::TrainConfig t;
  if (f.method == "gd") {
    t.method = ieh::Method::GradientDescent;
  } else if (f.method == "grid") {
    t.method = ieh::Method::Grid;
  } else {
    t.method = ieh::Method::Genetic;
  }
  t.train_fraction = f.train_frac;
  t.bounds.tau = {f.tau_min, f.tau_max};
  t.bounds.phi = {f.phi_min, f.phi_max};
  t.bounds.flip_offset = {f.offset_min, f.offset_max};
  t.ga.population = f.population;
  t.ga.generations = f.generations;
  t.ga.mutation_rate = f.mutation_rate;
  t.ga.mutation_scale = f.mutation_scale;
  t.ga.crossover_rate = f.crossover_rate;
  t.ga.elitism = f.elitism;
  t.ga.tournament = f.tournament;
  t.ga.seed = f.seed;
  t.gd.eta = f.eta;
  t.gd.delta = f.delta;
  t.gd.max_iters = f.max_iters;
  t.gd.tol = f.tol;
  t.gd.init = {f.init_tau, f.init_phi, f.init_offset};
  return t;
}

ieh::DiodeBridgeParams to_diode_params(const DiodeFlags& f) {
  ieh::DiodeBridgeParams p;
  p.v0 = f.v0;
  p.r = f.r;
  p.r_load = f.r_load;
  return p;
}

void warn_if_subthermal(const ieh::DiodeBridgeParams& p) {
  if (const auto w = ieh::validate(p)) std::cerr << "warning: " << *w << '\n';
}

std::vector<std::string> train_comments(const TrainFlags& f) {
  return {
      "method=" + f.method,
      "train_frac=" + ieh::format_double(f.train_frac),
      "seed=" + std::to_string(f.seed),
      "bounds tau=[" + std::to_string(f.tau_min) + "," + std::to_string(f.tau_max) +
          "] phi=[" + std::to_string(f.phi_min) + "," + std::to_string(f.phi_max) +
          "] offset=[" + std::to_string(f.offset_min) + "," +
          std::to_string(f.offset_max) + "]",
      "ga population=" + std::to_string(f.population) +
          " generations=" + std::to_string(f.generations) +
          " mutation_rate=" + ieh::format_double(f.mutation_rate) +
          " mutation_scale=" + ieh::format_double(f.mutation_scale) +
          " crossover_rate=" + ieh::format_double(f.crossover_rate) +
          " elitism=" + std::to_string(f.elitism) +
          " tournament=" + std::to_string(f.tournament),
      "gd eta=" + ieh::format_double(f.eta) + " delta=" + ieh::format_double(f.delta) +
          " max_iters=" + std::to_string(f.max_iters) +
          " tol=" + ieh::format_double(f.tol) + " init=(" + std::to_string(f.init_tau) +
          "," + std::to_string(f.init_phi) + "," + std::to_string(f.init_offset) + ")",
  };
}

std::string diode_comment(const DiodeFlags& f) {
  return "diode v0=" + ieh::format_double(f.v0) + " r=" + ieh::format_double(f.r) +
         " r_load=" + ieh::format_double(f.r_load);
}

std::string comment_block(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& line : lines) {
    out += "# " + line + '\n';
  }
  return out;
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ieh::IoError("cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw ieh::IoError("write failed: " + path);
}

// ---- generate ----

struct GenerateArgs {
  ieh::SyntheticSourceConfig cfg;
  std::int64_t channels = 2;
  std::string output;
};

int run_generate(const GenerateArgs& a) {
  if (a.channels != 1 && a.channels != 2) {
    throw ieh::ConfigError("--channels must be 1 or 2");
  }
  const auto [v1, v2] = ieh::generate_synthetic(a.cfg);

  std::vector<std::string> comments = {
      "command=generate",
      "f1=" + ieh::format_double(a.cfg.f1) + " f2=" + ieh::format_double(a.cfg.f2),
      "zeta1=" + ieh::format_double(a.cfg.zeta1) +
          " zeta2=" + ieh::format_double(a.cfg.zeta2),
      "amp1=" + ieh::format_double(a.cfg.amp1) + " amp2=" + ieh::format_double(a.cfg.amp2),
      "drive_bandwidth=" + ieh::format_double(a.cfg.drive_bandwidth),
      "duration=" + ieh::format_double(a.cfg.duration) +
          " sample_rate=" + ieh::format_double(a.cfg.sample_rate),
      "seed=" + std::to_string(a.cfg.seed),
      "channels=" + std::to_string(a.channels),
  };
  std::vector<ieh::VoltageSeries> channels{v1};
  if (a.channels == 2) channels.push_back(v2);
  ieh::write_csv(a.output, channels, comments);
  std::cout << "wrote " << v1.size() << " samples x " << a.channels << " channel(s) to "
            << a.output << '\n';
  return 0;
}

// ---- compare ----

struct CompareArgs {
  std::string input;
  std::string output;
  TrainFlags train;
  DiodeFlags diode;
};

int run_compare(const CompareArgs& a) {
  const auto channels = ieh::read_csv(a.input);
  ieh::CompareOptions opts;
  opts.train = to_train_config(a.train);
  opts.diode = to_diode_params(a.diode);
  warn_if_subthermal(opts.diode);

  const ieh::CompareTable table = ieh::compare_series(channels, opts);
  std::cout << ieh::format_compare_table(table);

  if (!a.output.empty()) {
    std::vector<std::string> comments = {"command=compare", "input=" + a.input,
                                         diode_comment(a.diode)};
    const auto tc = train_comments(a.train);
    comments.insert(comments.end(), tc.begin(), tc.end());
    write_text(a.output, comment_block(comments) + ieh::compare_table_csv(table));
    std::cout << "wrote " << a.output << '\n';
  }
  return 0;
}

// ---- optimize ----

struct OptimizeArgs {
  std::string input;
  std::string output;
  TrainFlags train;
};

int run_optimize(const OptimizeArgs& a) {
  const auto channels = ieh::read_csv(a.input);
  const ieh::TrainConfig cfg = to_train_config(a.train);
  const ieh::VoltageSeries* v2 = channels.size() > 1 ? &channels[1] : nullptr;
  const ieh::OptimizerReport rep = ieh::train_and_test(channels[0], v2, cfg);

  std::vector<std::string> comments = {"command=optimize", "input=" + a.input};
  const auto tc = train_comments(a.train);
  comments.insert(comments.end(), tc.begin(), tc.end());
  comments.push_back("best tau=" + std::to_string(rep.best.tau) +
                     " phi=" + std::to_string(rep.best.phi) +
                     " flip_offset=" + std::to_string(rep.best.flip_offset));
  comments.push_back("train c_total=" + ieh::format_double(rep.train_cost.c_total) +
                     " c_pos=" + ieh::format_double(rep.train_cost.c_pos) +
                     " c_vrms=" + ieh::format_double(rep.train_cost.c_vrms));
  comments.push_back("test c_total=" + ieh::format_double(rep.test_cost.c_total) +
                     " c_pos=" + ieh::format_double(rep.test_cost.c_pos) +
                     " c_vrms=" + ieh::format_double(rep.test_cost.c_vrms));
  comments.push_back("evaluations=" + std::to_string(rep.evaluations) +
                     " converged=" + (rep.converged ? std::string("yes") : "no"));

  std::string body = "iteration,best_cost\n";
  for (const ieh::TrajectoryPoint& p : rep.trajectory) {
    body += std::to_string(p.iteration) + ',' + ieh::format_double(p.cost) + '\n';
  }
  write_text(a.output, comment_block(comments) + body);

  std::cout << "best: tau=" << rep.best.tau << " phi=" << rep.best.phi
            << " flip_offset=" << rep.best.flip_offset << '\n'
            << "train cost " << rep.train_cost.c_total << ", test cost "
            << rep.test_cost.c_total << " (" << rep.evaluations << " evaluations)\n"
            << "wrote " << a.output << '\n';
  return 0;
}

// ---- landscape ----

struct LandscapeArgs {
  std::string input;
  std::string output;
  std::int64_t tau_min = 1, tau_max = 64;
  std::int64_t phi_min = 0, phi_max = 63;
  std::int64_t flip_offset = 0;
};

int run_landscape(const LandscapeArgs& a) {
  const auto channels = ieh::read_csv(a.input);
  const ieh::VoltageSeries* v2 = channels.size() > 1 ? &channels[1] : nullptr;
  const auto grid =
      ieh::landscape_grid(channels[0], v2, {a.tau_min, a.tau_max},
                          {a.phi_min, a.phi_max}, a.flip_offset);

  const std::vector<std::string> comments = {
      "command=landscape",
      "input=" + a.input,
      "tau=[" + std::to_string(a.tau_min) + "," + std::to_string(a.tau_max) + "] phi=[" +
          std::to_string(a.phi_min) + "," + std::to_string(a.phi_max) + "]",
      "flip_offset=" + std::to_string(a.flip_offset),
  };
  std::string body = "tau,phi,cost\n";
  for (const ieh::LandscapePoint& p : grid) {
    body += std::to_string(p.tau) + ',' + std::to_string(p.phi) + ',' +
            ieh::format_double(p.cost) + '\n';
  }
  write_text(a.output, comment_block(comments) + body);
  std::cout << "wrote " << grid.size() << " grid points to " << a.output << '\n';
  return 0;
}

// ---- snr-sweep ----

struct SnrSweepArgs {
  std::string input;
  std::string output;
  std::vector<double> snrs = {0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
  std::int64_t reps = 10;
  TrainFlags train;
  DiodeFlags diode;
};

int run_snr_sweep(const SnrSweepArgs& a) {
  const auto channels = ieh::read_csv(a.input);
  if (channels.size() != 2) {
    throw ieh::ConfigError("snr-sweep needs a two-channel input file");
  }
  ieh::SnrSweepOptions opts;
  opts.snrs = a.snrs;
  opts.reps = a.reps;
  opts.seed = a.train.seed;
  opts.train = to_train_config(a.train);
  opts.diode = to_diode_params(a.diode);
  warn_if_subthermal(opts.diode);

  const auto rows = ieh::snr_sweep(channels[0], channels[1], opts);

  std::vector<std::string> comments = {"command=snr-sweep", "input=" + a.input,
                                       "reps=" + std::to_string(a.reps),
                                       diode_comment(a.diode)};
  std::string snr_list = "snrs=";
  for (std::size_t i = 0; i < a.snrs.size(); ++i) {
    if (i > 0) snr_list += ',';
    snr_list += ieh::format_double(a.snrs[i]);
  }
  comments.push_back(snr_list);
  const auto tc = train_comments(a.train);
  comments.insert(comments.end(), tc.begin(), tc.end());

  write_text(a.output, comment_block(comments) + ieh::snr_sweep_csv(rows));
  std::cout << "wrote " << rows.size() << " sweep rows to " << a.output << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intelligent energy-harvester rectification: simulate, train, compare"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* cmd_gen = app.add_subcommand("generate", "Write a synthetic two-resonator CSV");
  cmd_gen->add_option("--output", gen.output, "Output CSV path")->required();
  cmd_gen->add_option("--f1", gen.cfg.f1, "Resonant frequency 1, Hz")->capture_default_str();
  cmd_gen->add_option("--f2", gen.cfg.f2, "Resonant frequency 2, Hz")->capture_default_str();
  cmd_gen->add_option("--zeta1", gen.cfg.zeta1, "Damping ratio 1")->capture_default_str();
  cmd_gen->add_option("--zeta2", gen.cfg.zeta2, "Damping ratio 2")->capture_default_str();
  cmd_gen->add_option("--amp1", gen.cfg.amp1, "Output scale 1, volts")->capture_default_str();
  cmd_gen->add_option("--amp2", gen.cfg.amp2, "Output scale 2, volts")->capture_default_str();
  cmd_gen->add_option("--drive-bandwidth", gen.cfg.drive_bandwidth,
                      "Drive low-pass cutoff, Hz")
      ->capture_default_str();
  cmd_gen->add_option("--duration", gen.cfg.duration, "Signal length, s")
      ->capture_default_str();
  cmd_gen->add_option("--rate", gen.cfg.sample_rate, "Sample rate, Hz")
      ->capture_default_str();
  cmd_gen->add_option("--seed", gen.cfg.seed, "RNG seed")->capture_default_str();
  cmd_gen->add_option("--channels", gen.channels, "Channels to write (1 or 2)")
      ->capture_default_str();

  CompareArgs cmp;
  CLI::App* cmd_cmp =
      app.add_subcommand("compare", "Raw vs diode bridge vs trained interventions");
  cmd_cmp->add_option("--input", cmp.input, "Input CSV")->required();
  cmd_cmp->add_option("--output", cmp.output, "Optional CSV for the table");
  add_train_flags(cmd_cmp, cmp.train);
  add_diode_flags(cmd_cmp, cmp.diode);

  OptimizeArgs opt;
  CLI::App* cmd_opt = app.add_subcommand("optimize", "Train intervention parameters");
  cmd_opt->add_option("--input", opt.input, "Input CSV")->required();
  cmd_opt->add_option("--output", opt.output, "Report CSV path")->required();
  add_train_flags(cmd_opt, opt.train);

  LandscapeArgs land;
  CLI::App* cmd_land = app.add_subcommand("landscape", "Exhaustive cost grid export");
  cmd_land->add_option("--input", land.input, "Input CSV")->required();
  cmd_land->add_option("--output", land.output, "Output CSV path")->required();
  cmd_land->add_option("--tau-min", land.tau_min, "Smallest flip period")
      ->capture_default_str();
  cmd_land->add_option("--tau-max", land.tau_max, "Largest flip period")
      ->capture_default_str();
  cmd_land->add_option("--phi-min", land.phi_min, "Smallest delay")->capture_default_str();
  cmd_land->add_option("--phi-max", land.phi_max, "Largest delay")->capture_default_str();
  cmd_land->add_option("--flip-offset", land.flip_offset, "Fixed flip offset")
      ->capture_default_str();

  SnrSweepArgs sweep;
  CLI::App* cmd_sweep =
      app.add_subcommand("snr-sweep", "Bridge vs interventions across noise levels");
  cmd_sweep->add_option("--input", sweep.input, "Clean two-channel CSV")->required();
  cmd_sweep->add_option("--output", sweep.output, "Output CSV path")->required();
  cmd_sweep->add_option("--snrs", sweep.snrs, "Linear SNR values")
      ->delimiter(',')
      ->capture_default_str();
  cmd_sweep->add_option("--reps", sweep.reps, "Noise realizations per SNR")
      ->capture_default_str();
  add_train_flags(cmd_sweep, sweep.train);
  add_diode_flags(cmd_sweep, sweep.diode);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (app.got_subcommand(cmd_gen)) return run_generate(gen);
    if (app.got_subcommand(cmd_cmp)) return run_compare(cmp);
    if (app.got_subcommand(cmd_opt)) return run_optimize(opt);
    if (app.got_subcommand(cmd_land)) return run_landscape(land);
    if (app.got_subcommand(cmd_sweep)) return run_snr_sweep(sweep);
  } catch (const ieh::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const ieh::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ieh::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ieh::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return 0;
}
