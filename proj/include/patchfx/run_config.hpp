#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "patchfx/causal_tree.hpp"
#include "patchfx/features.hpp"

namespace patchfx {

// One JSON document drives every subcommand; command-line flags override
// individual keys (flag > config > default).
struct RunConfig {
  std::string matches_path;
  std::string player_matches_path;
  std::string champions_path;

  bool competitive_only = true;
  double max_reject_rate = 0.01;

  int top_k_champions = 25;
  std::int64_t min_rows_per_arm = 0;  // 0: fall back to tree.min_arm_count
  TreeConfig tree;
  std::vector<BinningSpec> binning;

  bool run_ate_series = true;
  bool run_win_rates = true;
  bool run_correlations = true;
  bool run_heatmaps = true;
  bool run_importance = true;
  bool run_effect_gaps = true;
  bool effect_gap_sample_weighted = false;

  std::string out_dir = "out";
  std::uint64_t seed = 0;
  int threads = 1;

  std::int64_t effective_min_rows_per_arm() const {
    return min_rows_per_arm > 0 ? min_rows_per_arm : tree.min_arm_count;
  }

  void validate() const;  // throws ConfigError
  static RunConfig from_json(const std::string& text);
  static RunConfig from_json_file(const std::string& path);
  std::string to_json() const;  // canonical snapshot for the manifest
};

// Stable per-task seed for batch work: depends only on the global seed and
// the task's position in the enumeration, never on scheduling.
std::uint64_t derive_task_seed(std::uint64_t seed, std::uint64_t task_index);

struct StageStat {
  std::string name;
  double wall_ms = 0.0;
  std::vector<std::pair<std::string, std::int64_t>> counts;
};

// Written once per run, success or failure, as <out>/manifest_<command>.json.
struct RunManifest {
  std::string command;
  RunConfig config;
  std::vector<std::pair<std::string, std::string>> input_hashes;
  std::vector<StageStat> stages;
  std::vector<std::string> outputs;
  std::vector<std::string> skipped_frames;
  std::vector<std::string> warnings;
  std::string error;  // message of the exception that ended the run
  int exit_code = 0;

  std::string to_json() const;
  // Best effort: returns the path written, or empty on I/O failure.
  std::string write() const;
};

class StageTimer {
 public:
  explicit StageTimer(RunManifest& manifest, std::string name);
  ~StageTimer();
  void count(const std::string& key, std::int64_t value);

 private:
  RunManifest& manifest_;
  StageStat stat_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace patchfx
