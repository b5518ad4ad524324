#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ieh/diode.hpp"
#include "ieh/optimize.hpp"

namespace ieh {

struct CompareOptions {
  TrainConfig train{};
  DiodeBridgeParams diode{};
};

/// One table cell pair: V_RMS in volts, C_POS/L in volts^2 per sample.
struct StageMetrics {
  double vrms = 0.0;
  double cpos_per_sample = 0.0;
};

/// One comparison mode (single voltage or voltage pair), evaluated on the
/// held-out test split. V_RMS is computed per channel before combination
/// (RMS over the concatenated channels), which the interventions preserve
/// exactly; DB entries rectify each channel separately.
struct CompareColumn {
  StageMetrics raw{};
  StageMetrics db{};
  StageMetrics ieh{};
  OptimizerReport report{};
  std::int64_t test_length = 0;
};

struct CompareTable {
  std::optional<CompareColumn> single;
  std::optional<CompareColumn> pair;
};

/// Builds the raw / DB / IEH comparison. One input channel produces the
/// single-voltage column; two channels produce both columns (the single
/// one uses the first channel).
CompareTable compare_series(const std::vector<VoltageSeries>& channels,
                            const CompareOptions& opts);

/// Human-readable table rounded to 2 decimals, one row per stage.
std::string format_compare_table(const CompareTable& table);

/// Full-precision CSV: mode,row,vrms,cpos_per_sample,tau,phi,flip_offset.
std::string compare_table_csv(const CompareTable& table);

struct SnrSweepOptions {
  std::vector<double> snrs;  // linear power ratios
  std::int64_t reps = 10;    // noise realizations averaged per SNR
  std::uint64_t seed = 1;
  TrainConfig train{};
  DiodeBridgeParams diode{};
};

void validate(const SnrSweepOptions& opts);

struct SnrSweepRow {
  double snr = 0.0;
  double vrms_ieh = 0.0;
  double vrms_db = 0.0;
  double c_ieh = 0.0;
  double c_db = 0.0;
};

/// For each SNR: average over `reps` independent noise realizations of the
/// clean pair. Each realization is retrained on its train split and scored
/// on its test split; the DB cost uses the same rearrangement bound.
std::vector<SnrSweepRow> snr_sweep(const VoltageSeries& v1, const VoltageSeries& v2,
                                   const SnrSweepOptions& opts);

/// CSV body: snr,vrms_ieh,vrms_db,c_ieh,c_db (full precision).
std::string snr_sweep_csv(const std::vector<SnrSweepRow>& rows);

/// Deterministic stream splitter for deriving per-realization seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace ieh
