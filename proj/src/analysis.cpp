#include "patchfx/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "patchfx/csv.hpp"
#include "patchfx/errors.hpp"

namespace patchfx {

AteSeries ate_series(const std::vector<MatchRecord>& matches,
                     const std::vector<PlayerMatchRecord>& player_matches,
                     const PatchTimeline& timeline) {
  std::unordered_map<std::string, PatchVersion> patch_of;
  for (const auto& m : matches) patch_of[m.match_id] = m.patch;

  std::map<PatchVersion, SummaryStats> kills_by_patch;
  for (const auto& pm : player_matches) {
    auto it = patch_of.find(pm.match_id);
    if (it == patch_of.end()) continue;
    kills_by_patch[it->second].add(static_cast<double>(pm.kills));
  }

  AteSeries series;
  for (const auto& [wt, wt1] : timeline.consecutive_pairs()) {
    AteCell cell;
    cell.control_patch = wt;
    cell.treated_patch = wt1;
    auto before = kills_by_patch.find(wt);
    auto after = kills_by_patch.find(wt1);
    if (before == kills_by_patch.end() || after == kills_by_patch.end() ||
        before->second.n < 2 || after->second.n < 2) {
      cell.missing = true;
    } else {
      cell.effect = estimate_effect(after->second, before->second);
    }
    series.cells.push_back(cell);
  }
  return series;
}

WinRateSeries win_rate_series(
    const std::vector<MatchRecord>& matches,
    const std::vector<PlayerMatchRecord>& player_matches,
    const ChampionCatalog& catalog, ChampionId champion) {
  WinRateSeries series;
  series.champion = champion;
  series.champion_name = catalog.at(champion).name;

  std::unordered_map<std::string, const MatchRecord*> by_match;
  for (const auto& m : matches) by_match[m.match_id] = &m;

  // (match, team) presence, deduplicated: five players share a team row.
  std::set<std::pair<std::string, Team>> presence;
  for (const auto& pm : player_matches) {
    if (pm.champion == champion) presence.emplace(pm.match_id, pm.team);
  }

  std::map<PatchVersion, std::pair<std::int64_t, std::int64_t>> tally;
  for (const auto& [match_id, team] : presence) {
    auto it = by_match.find(match_id);
    if (it == by_match.end()) continue;
    auto& [wins, games] = tally[it->second->patch];
    ++games;
    if (it->second->winning_team == team) ++wins;
  }
  for (const auto& [patch, wg] : tally) {
    WinRateCell cell;
    cell.patch = patch;
    cell.wins = wg.first;
    cell.games = wg.second;
    cell.rate = static_cast<double>(cell.wins) /
                static_cast<double>(cell.games);
    series.cells.push_back(cell);
  }
  return series;
}

PearsonResult correlate(const WinRateSeries& a, const WinRateSeries& b) {
  std::map<PatchVersion, double> rate_b;
  for (const auto& cell : b.cells) rate_b[cell.patch] = cell.rate;

  std::vector<double> xs, ys;
  for (const auto& cell : a.cells) {
    auto it = rate_b.find(cell.patch);
    if (it == rate_b.end()) continue;
    xs.push_back(cell.rate);
    ys.push_back(it->second);
  }
  if (xs.size() < 3) {
    throw FrameError("correlation requires at least 3 common patches");
  }
  auto sa = summarize(xs), sb = summarize(ys);
  if (sa.m2 == 0.0 || sb.m2 == 0.0) {
    throw FrameError("undefined correlation");
  }
  return pearson(xs, ys);
}

HeatmapTable heatmap_table(const std::vector<double>& feature_values,
                           const std::vector<double>& outcomes,
                           const std::vector<PatchVersion>& patches,
                           const BinningSpec& binning,
                           const PatchTimeline& timeline, HeatmapMode mode) {
  if (feature_values.size() != outcomes.size() ||
      feature_values.size() != patches.size()) {
    throw InternalError("heatmap input arrays disagree in length");
  }
  HeatmapTable table;
  table.feature = binning.feature;
  table.mode = mode;

  auto binned = percentile_bins(feature_values, binning);
  table.n_bins = binned.n_bins;
  table.bin_shares = binned.shares;
  table.warnings = binned.warnings;

  std::map<PatchVersion, std::size_t> col_of;
  if (mode == HeatmapMode::mean_outcome) {
    for (const auto& e : timeline.entries) {
      col_of[e.version] = table.column_labels.size();
      table.column_labels.push_back(e.version.str());
    }
  } else {
    for (const auto& [wt, wt1] : timeline.consecutive_pairs()) {
      table.column_labels.push_back(wt.str() + "->" + wt1.str());
    }
  }

  if (mode == HeatmapMode::mean_outcome) {
    std::vector<std::vector<SummaryStats>> stats(
        table.n_bins, std::vector<SummaryStats>(table.column_labels.size()));
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (binned.bins[i] < 0) continue;
      auto col = col_of.find(patches[i]);
      if (col == col_of.end()) continue;
      stats[binned.bins[i]][col->second].add(outcomes[i]);
    }
    table.cells.assign(table.n_bins,
                       std::vector<double>(table.column_labels.size(),
                                           std::nan("")));
    table.counts.assign(table.n_bins,
                        std::vector<std::int64_t>(table.column_labels.size(), 0));
    for (int b = 0; b < table.n_bins; ++b) {
      for (std::size_t c = 0; c < table.column_labels.size(); ++c) {
        table.counts[b][c] = stats[b][c].n;
        if (stats[b][c].n > 0) table.cells[b][c] = stats[b][c].mean;
      }
    }
    return table;
  }

  // ate mode: per bin, effect of each consecutive transition.
  std::map<PatchVersion, std::size_t> patch_col;
  for (const auto& e : timeline.entries) {
    patch_col[e.version] = patch_col.size();
  }
  std::vector<std::vector<SummaryStats>> stats(
      table.n_bins, std::vector<SummaryStats>(patch_col.size()));
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (binned.bins[i] < 0) continue;
    auto col = patch_col.find(patches[i]);
    if (col == patch_col.end()) continue;
    stats[binned.bins[i]][col->second].add(outcomes[i]);
  }
  auto pairs = timeline.consecutive_pairs();
  table.cells.assign(table.n_bins,
                     std::vector<double>(pairs.size(), std::nan("")));
  table.counts.assign(table.n_bins, std::vector<std::int64_t>(pairs.size(), 0));
  table.counts_treated.assign(table.n_bins,
                              std::vector<std::int64_t>(pairs.size(), 0));
  table.counts_control.assign(table.n_bins,
                              std::vector<std::int64_t>(pairs.size(), 0));
  for (int b = 0; b < table.n_bins; ++b) {
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto& before = stats[b][patch_col.at(pairs[p].first)];
      const auto& after = stats[b][patch_col.at(pairs[p].second)];
      table.counts_control[b][p] = before.n;
      table.counts_treated[b][p] = after.n;
      table.counts[b][p] = before.n + after.n;
      if (before.n >= 2 && after.n >= 2) {
        table.cells[b][p] = estimate_effect(after, before).tau;
      }
    }
  }
  return table;
}

FeatureImportanceReport feature_importance(
    const std::vector<const CausalTree*>& trees) {
  FeatureImportanceReport report;
  std::map<std::string, double> weights;
  for (const auto* tree : trees) {
    tree->for_each_node([&](const TreeNode& node) {
      if (!node.is_leaf()) {
        weights[node.split_feature] += static_cast<double>(node.samples);
      }
    });
  }
  for (const auto& [feature, weight] : weights) {
    report.total_weight += weight;
  }
  if (weights.empty()) {
    report.warnings.push_back(
        "no splits in any tree; feature importance is empty");
    return report;
  }
  for (const auto& [feature, weight] : weights) {
    report.entries.push_back({feature, weight, weight / report.total_weight});
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const FeatureImportanceEntry& a, const FeatureImportanceEntry& b) {
              if (a.share != b.share) return a.share > b.share;
              return a.feature < b.feature;
            });
  return report;
}

EffectGapEntry effect_gap(const std::vector<const CausalTree*>& trees,
                          const std::string& feature, bool sample_weighted) {
  EffectGapEntry entry;
  entry.feature = feature;
  std::vector<double> gaps;
  std::vector<double> weights;
  for (const auto* tree : trees) {
    tree->for_each_node([&](const TreeNode& node) {
      if (node.is_leaf() || node.split_feature != feature) return;
      gaps.push_back(node.left->effect.tau - node.right->effect.tau);
      weights.push_back(static_cast<double>(node.samples));
    });
  }
  entry.n_splits = static_cast<std::int64_t>(gaps.size());
  if (gaps.empty()) return entry;

  double wsum = 0.0, mean = 0.0;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    double w = sample_weighted ? weights[i] : 1.0;
    wsum += w;
    mean += w * gaps[i];
  }
  mean /= wsum;
  entry.mean_gap = mean;

  if (gaps.size() >= 2) {
    double ss = 0.0;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      double w = sample_weighted ? weights[i] : 1.0;
      ss += w * (gaps[i] - mean) * (gaps[i] - mean);
    }
    // Normal-approximation CI over splits; the weighted variant scales the
    // squared deviations by normalized weights.
    double var = ss / wsum * static_cast<double>(gaps.size()) /
                 static_cast<double>(gaps.size() - 1);
    double se = std::sqrt(var / static_cast<double>(gaps.size()));
    entry.ci_defined = true;
    entry.ci95_low = mean - 1.959963985 * se;
    entry.ci95_high = mean + 1.959963985 * se;
  }
  return entry;
}

std::vector<EffectGapEntry> effect_gaps(
    const std::vector<const CausalTree*>& trees, bool sample_weighted) {
  auto importance = feature_importance(trees);
  std::vector<EffectGapEntry> out;
  for (const auto& entry : importance.entries) {
    out.push_back(effect_gap(trees, entry.feature, sample_weighted));
  }
  return out;
}

void write_ate_series_csv(const std::string& path, const AteSeries& series) {
  CsvTable table;
  table.header = {"control_patch", "treated_patch", "tau", "se",
                  "p_value", "n_before", "n_after"};
  for (const auto& cell : series.cells) {
    std::vector<std::string> row;
    row.push_back(cell.control_patch.str());
    row.push_back(cell.treated_patch.str());
    if (cell.missing) {
      row.insert(row.end(), {"", "", "", "", ""});
    } else {
      row.push_back(format_double(cell.effect.tau));
      row.push_back(format_double(cell.effect.se));
      row.push_back(format_double(cell.effect.p_value));
      row.push_back(std::to_string(cell.effect.n_control));
      row.push_back(std::to_string(cell.effect.n_treated));
    }
    table.rows.push_back(std::move(row));
  }
  write_csv(path, table);
}

void write_win_rates_csv(const std::string& path,
                         const std::vector<WinRateSeries>& series) {
  CsvTable table;
  table.header = {"champion", "patch", "wins", "games", "rate"};
  for (const auto& s : series) {
    for (const auto& cell : s.cells) {
      table.rows.push_back({s.champion_name, cell.patch.str(),
                            std::to_string(cell.wins),
                            std::to_string(cell.games),
                            format_double(cell.rate)});
    }
  }
  write_csv(path, table);
}

void write_heatmap_csv(const std::string& path, const HeatmapTable& table) {
  CsvTable out;
  out.header = {"bin", "bin_share"};
  for (const auto& label : table.column_labels) out.header.push_back(label);
  for (int b = 0; b < table.n_bins; ++b) {
    std::vector<std::string> row = {std::to_string(b),
                                    format_double(table.bin_shares[b])};
    for (std::size_t c = 0; c < table.column_labels.size(); ++c) {
      double v = table.cells[b][c];
      row.push_back(std::isnan(v) ? "" : format_double(v));
    }
    out.rows.push_back(std::move(row));
  }
  write_csv(path, out);
}

void write_feature_importance_csv(const std::string& path,
                                  const FeatureImportanceReport& report) {
  CsvTable table;
  table.header = {"feature", "total_weight", "share"};
  for (const auto& entry : report.entries) {
    table.rows.push_back({entry.feature, format_double(entry.total_weight),
                          format_double(entry.share)});
  }
  write_csv(path, table);
}

void write_effect_gaps_csv(const std::string& path,
                           const std::vector<EffectGapEntry>& entries) {
  CsvTable table;
  table.header = {"feature", "n_splits", "mean_gap", "ci95_low", "ci95_high"};
  for (const auto& entry : entries) {
    if (entry.n_splits == 0) continue;
    std::vector<std::string> row = {entry.feature,
                                    std::to_string(entry.n_splits),
                                    format_double(entry.mean_gap)};
    if (entry.ci_defined) {
      row.push_back(format_double(entry.ci95_low));
      row.push_back(format_double(entry.ci95_high));
    } else {
      row.push_back("");
      row.push_back("");
    }
    table.rows.push_back(std::move(row));
  }
  write_csv(path, table);
}

}  // namespace patchfx
