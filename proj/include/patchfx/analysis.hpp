#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patchfx/causal_tree.hpp"
#include "patchfx/features.hpp"
#include "patchfx/stats.hpp"
#include "patchfx/types.hpp"

namespace patchfx {

// Average effect of each consecutive patch transition on an outcome.
struct AteCell {
  PatchVersion control_patch;
  PatchVersion treated_patch;
  bool missing = false;  // an arm too small for inference
  EffectEstimate effect;
};

struct AteSeries {
  std::vector<AteCell> cells;  // timeline order
};

// Outcome is per-player kills; arms are all player-match rows on each patch
// of the pair.
AteSeries ate_series(const std::vector<MatchRecord>& matches,
                     const std::vector<PlayerMatchRecord>& player_matches,
                     const PatchTimeline& timeline);

struct WinRateCell {
  PatchVersion patch;
  std::int64_t wins = 0;
  std::int64_t games = 0;  // team-presence rows
  double rate = 0.0;
};

struct WinRateSeries {
  ChampionId champion = 0;
  std::string champion_name;
  std::vector<WinRateCell> cells;  // patches with games > 0 only
};

// Fraction of team-presence rows whose team won, per patch. A mirror match
// contributes one win and one loss.
WinRateSeries win_rate_series(const std::vector<MatchRecord>& matches,
                              const std::vector<PlayerMatchRecord>& player_matches,
                              const ChampionCatalog& catalog,
                              ChampionId champion);

// Pearson correlation between two series aligned on common patches.
// Throws FrameError for n < 3 or "undefined correlation" on zero variance.
PearsonResult correlate(const WinRateSeries& a, const WinRateSeries& b);

enum class HeatmapMode { mean_outcome, ate };

// bins x columns table; columns are patches (mean mode) or consecutive
// patch transitions (ate mode). NaN cells are missing (empty in CSV).
struct HeatmapTable {
  std::string feature;
  HeatmapMode mode = HeatmapMode::mean_outcome;
  std::vector<std::string> column_labels;
  int n_bins = 0;
  std::vector<double> bin_shares;
  std::vector<std::vector<double>> cells;          // [bin][column]
  std::vector<std::vector<std::int64_t>> counts;   // rows behind each cell
  // ate mode only: per-arm counts backing each cell.
  std::vector<std::vector<std::int64_t>> counts_treated;
  std::vector<std::vector<std::int64_t>> counts_control;
  std::vector<std::string> warnings;
};

// One row per unit: its binned-feature value (NaN = missing), outcome, and
// patch. Binning is computed over the pooled values.
HeatmapTable heatmap_table(const std::vector<double>& feature_values,
                           const std::vector<double>& outcomes,
                           const std::vector<PatchVersion>& patches,
                           const BinningSpec& binning,
                           const PatchTimeline& timeline, HeatmapMode mode);

struct FeatureImportanceEntry {
  std::string feature;
  double total_weight = 0.0;  // sum of node samples at splits on feature
  double share = 0.0;
};

struct FeatureImportanceReport {
  std::vector<FeatureImportanceEntry> entries;  // share desc, name asc
  double total_weight = 0.0;
  std::vector<std::string> warnings;
};

FeatureImportanceReport feature_importance(
    const std::vector<const CausalTree*>& trees);

struct EffectGapEntry {
  std::string feature;
  std::int64_t n_splits = 0;
  double mean_gap = 0.0;  // mean over splits of tau(left) - tau(right)
  bool ci_defined = false;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
};

// Gap statistics for one feature across all splits in all trees; entry is
// absent (nullopt-like: n_splits == 0) when no tree splits on the feature.
// sample_weighted switches the aggregation to weight each split by the
// splitting node's sample count.
EffectGapEntry effect_gap(const std::vector<const CausalTree*>& trees,
                          const std::string& feature,
                          bool sample_weighted = false);

// Every feature that appears in at least one split, ordered by importance.
std::vector<EffectGapEntry> effect_gaps(
    const std::vector<const CausalTree*>& trees,
    bool sample_weighted = false);

void write_ate_series_csv(const std::string& path, const AteSeries& series);
void write_win_rates_csv(const std::string& path,
                         const std::vector<WinRateSeries>& series);
void write_heatmap_csv(const std::string& path, const HeatmapTable& table);
void write_feature_importance_csv(const std::string& path,
                                  const FeatureImportanceReport& report);
void write_effect_gaps_csv(const std::string& path,
                           const std::vector<EffectGapEntry>& entries);

}  // namespace patchfx
