#include "ieh/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ieh/csv.hpp"

namespace ieh {

namespace {

VoltageSeries sum_series(const VoltageSeries& a, const VoltageSeries& b) {
  if (a.samples.size() != b.samples.size()) {
    throw DimensionError("cannot sum series of different lengths");
  }
  VoltageSeries out = a;
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    out.samples[i] += b.samples[i];
  }
  return out;
}

/// RMS over the two channels taken together (concatenation).
double concat_vrms(const VoltageSeries& a, const VoltageSeries& b) {
  return std::sqrt((dot(a, a) + dot(b, b)) /
                   static_cast<double>(a.samples.size() + b.samples.size()));
}

CompareColumn compare_single(const VoltageSeries& v, const CompareOptions& opts) {
  CompareColumn col;
  col.report = train_and_test(v, nullptr, opts.train);

  const auto [train, test] = split_train_test(v, opts.train.train_fraction);
  const double L = static_cast<double>(test.samples.size());
  col.test_length = static_cast<std::int64_t>(test.samples.size());

  col.raw.vrms = rms(test);
  col.raw.cpos_per_sample = positivity_cost(test) / L;

  const BridgeOutput db = bridge_rectify(test, opts.diode);
  col.db.vrms = rms(db.load_voltage);
  col.db.cpos_per_sample = positivity_cost(db.load_voltage) / L;

  const VoltageSeries out = intervene_single(test, col.report.best);
  col.ieh.vrms = rms(out);  // flip preserves every squared sample
  col.ieh.cpos_per_sample = col.report.test_cost.c_pos / L;
  return col;
}

CompareColumn compare_pair(const VoltageSeries& v1, const VoltageSeries& v2,
                           const CompareOptions& opts) {
  CompareColumn col;
  col.report = train_and_test(v1, &v2, opts.train);

  const auto [train1, test1] = split_train_test(v1, opts.train.train_fraction);
  const auto [train2, test2] = split_train_test(v2, opts.train.train_fraction);
  const double L = static_cast<double>(test1.samples.size());
  col.test_length = static_cast<std::int64_t>(test1.samples.size());

  const double raw_vrms = concat_vrms(test1, test2);
  col.raw.vrms = raw_vrms;
  col.raw.cpos_per_sample = positivity_cost(sum_series(test1, test2)) / L;

  const VoltageSeries load1 = bridge_rectify(test1, opts.diode).load_voltage;
  const VoltageSeries load2 = bridge_rectify(test2, opts.diode).load_voltage;
  col.db.vrms = concat_vrms(load1, load2);
  col.db.cpos_per_sample = positivity_cost(sum_series(load1, load2)) / L;

  // Shift and flip permute and negate samples within each channel, so the
  // per-channel energies -- and with them this V_RMS -- are preserved.
  col.ieh.vrms = raw_vrms;
  col.ieh.cpos_per_sample = col.report.test_cost.c_pos / L;
  return col;
}

}  // namespace

CompareTable compare_series(const std::vector<VoltageSeries>& channels,
                            const CompareOptions& opts) {
  if (channels.empty() || channels.size() > 2) {
    throw ConfigError("comparison needs one or two voltage channels");
  }
  validate(opts.train);
  (void)validate(opts.diode);

  CompareTable table;
  table.single = compare_single(channels[0], opts);
  if (channels.size() == 2) {
    table.pair = compare_pair(channels[0], channels[1], opts);
  }
  return table;
}

namespace {

void append_row(std::string& out, const char* label, const CompareTable& t,
                StageMetrics CompareColumn::* stage) {
  char buf[160];
  out += label;
  if (t.single) {
    const StageMetrics& m = (*t.single).*stage;
    std::snprintf(buf, sizeof buf, "  %8.2f %12.2f", m.vrms, m.cpos_per_sample);
    out += buf;
  }
  if (t.pair) {
    const StageMetrics& m = (*t.pair).*stage;
    std::snprintf(buf, sizeof buf, "   %8.2f %12.2f", m.vrms, m.cpos_per_sample);
    out += buf;
  }
  out += '\n';
}

std::string params_line(const char* mode, const OptimizerReport& rep) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "IEH parameters (%s): tau=%lld phi=%lld flip_offset=%lld (test cost %.4f)\n",
                mode, static_cast<long long>(rep.best.tau),
                static_cast<long long>(rep.best.phi),
                static_cast<long long>(rep.best.flip_offset), rep.test_cost.c_total);
  return buf;
}

}  // namespace

std::string format_compare_table(const CompareTable& t) {
  std::string out;
  out += "        ";
  if (t.single) out += "  1 voltage           ";
  if (t.pair) out += "   2 voltages          ";
  out += '\n';
  out += "        ";
  if (t.single) out += "  V_RMS[V] C_POS/L[V^2]";
  if (t.pair) out += "   V_RMS[V] C_POS/L[V^2]";
  out += '\n';
  append_row(out, "raw data", t, &CompareColumn::raw);
  append_row(out, "DB      ", t, &CompareColumn::db);
  append_row(out, "IEH     ", t, &CompareColumn::ieh);
  out += '\n';
  if (t.single) out += params_line("1 voltage", t.single->report);
  if (t.pair) out += params_line("2 voltages", t.pair->report);
  return out;
}

namespace {

void csv_rows(std::string& out, const char* mode, const CompareColumn& col) {
  const auto row = [&](const char* name, const StageMetrics& m, bool with_params) {
    out += mode;
    out += ',';
    out += name;
    out += ',';
    out += format_double(m.vrms);
    out += ',';
    out += format_double(m.cpos_per_sample);
    if (with_params) {
      out += ',' + std::to_string(col.report.best.tau) + ',' +
             std::to_string(col.report.best.phi) + ',' +
             std::to_string(col.report.best.flip_offset);
    } else {
      out += ",,,";
    }
    out += '\n';
  };
  row("raw", col.raw, false);
  row("db", col.db, false);
  row("ieh", col.ieh, true);
}

}  // namespace

std::string compare_table_csv(const CompareTable& t) {
  std::string out = "mode,row,vrms,cpos_per_sample,tau,phi,flip_offset\n";
  if (t.single) csv_rows(out, "single", *t.single);
  if (t.pair) csv_rows(out, "pair", *t.pair);
  return out;
}

void validate(const SnrSweepOptions& opts) {
  if (opts.snrs.empty()) throw ConfigError("SNR sweep needs at least one SNR value");
  for (double s : opts.snrs) {
    if (!(s > 0.0)) throw ConfigError("SNR values must be positive");
  }
  if (opts.reps < 1) throw ConfigError("SNR sweep needs reps >= 1");
  validate(opts.train);
  (void)validate(opts.diode);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<SnrSweepRow> snr_sweep(const VoltageSeries& v1, const VoltageSeries& v2,
                                   const SnrSweepOptions& opts) {
  validate(opts);
  validate(v1);
  validate(v2);
  if (v1.samples.size() != v2.samples.size()) {
    throw DimensionError("SNR sweep needs channels of equal length");
  }

  std::vector<SnrSweepRow> rows;
  rows.reserve(opts.snrs.size());
  for (std::size_t i = 0; i < opts.snrs.size(); ++i) {
    const double snr = opts.snrs[i];
    SnrSweepRow row;
    row.snr = snr;

    for (std::int64_t rep = 0; rep < opts.reps; ++rep) {
      const std::uint64_t base =
          mix_seed(opts.seed, i * 0x10001ULL + static_cast<std::uint64_t>(rep));
      const VoltageSeries noisy1 = add_noise(v1, snr, mix_seed(base, 1));
      const VoltageSeries noisy2 = add_noise(v2, snr, mix_seed(base, 2));

      TrainConfig train = opts.train;
      train.ga.seed = mix_seed(base, 3);
      const OptimizerReport report = train_and_test(noisy1, &noisy2, train);

      const auto [train1, test1] = split_train_test(noisy1, train.train_fraction);
      const auto [train2, test2] = split_train_test(noisy2, train.train_fraction);

      row.vrms_ieh += concat_vrms(test1, test2);
      row.c_ieh += report.test_cost.c_total;

      const VoltageSeries load1 = bridge_rectify(test1, opts.diode).load_voltage;
      const VoltageSeries load2 = bridge_rectify(test2, opts.diode).load_voltage;
      row.vrms_db += concat_vrms(load1, load2);
      const VoltageSeries db_sum = sum_series(load1, load2);
      row.c_db += vrms_cost_pair(test1, test2, db_sum) + positivity_cost(db_sum);
    }

    const double n = static_cast<double>(opts.reps);
    row.vrms_ieh /= n;
    row.vrms_db /= n;
    row.c_ieh /= n;
    row.c_db /= n;
    rows.push_back(row);
  }
  return rows;
}

std::string snr_sweep_csv(const std::vector<SnrSweepRow>& rows) {
  std::string out = "snr,vrms_ieh,vrms_db,c_ieh,c_db\n";
  for (const SnrSweepRow& r : rows) {
    out += format_double(r.snr) + ',' + format_double(r.vrms_ieh) + ',' +
           format_double(r.vrms_db) + ',' + format_double(r.c_ieh) + ',' +
           format_double(r.c_db) + '\n';
  }
  return out;
}

}  // namespace ieh
