#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "patchfx/types.hpp"

namespace patchfx {

// Per-(user, match) derived history features. All *AtStart statistics use
// strictly prior matches only; the current match never leaks into its own
// features.
enum PlayerFeature : int {
  kTimeSinceLastMatch = 0,
  kSessionNumber,
  kMatchIndexInSession,
  kMatchesPlayedSoFar,
  kCumKillsAtStart,
  kCumDeathsAtStart,
  kCumAssistsAtStart,
  kCumGoldEarnedAtStart,
  kCumGoldSpentAtStart,
  kCumMatchDurationAtStart,
  kCumWinsAtStart,
  kMeanKillsAtStart,
  kMeanDeathsAtStart,
  kMeanAssistsAtStart,
  kMeanKdaAtStart,
  kMeanGoldEarnedAtStart,
  kMeanGoldSpentAtStart,
  kMeanMatchDurationAtStart,
  kMeanWinsAtStart,
  kMeanChampLevelAtStart,
  kSessionCumKillsAtStart,
  kSessionCumDeathsAtStart,
  kSessionCumAssistsAtStart,
  kSessionCumGoldEarnedAtStart,
  kSessionCumGoldSpentAtStart,
  kSessionCumMatchDurationAtStart,
  kSessionCumWinsAtStart,
  kSessionMeanKillsAtStart,
  kSessionMeanDeathsAtStart,
  kSessionMeanAssistsAtStart,
  kSessionMeanKdaAtStart,
  kSessionMeanGoldEarnedAtStart,
  kSessionMeanGoldSpentAtStart,
  kSessionMeanMatchDurationAtStart,
  kSessionMeanWinsAtStart,
  kSessionMeanChampLevelAtStart,
  kHighestAchievedSeasonTier,
  kPlayerFeatureCount,
};

// Column names in export order (camelCase, matching the telemetry domain's
// conventional naming).
const std::array<std::string, kPlayerFeatureCount>& player_feature_names();

struct PlayerDerivedFeatures {
  std::string user_id;
  std::string match_id;
  std::array<double, kPlayerFeatureCount> values{};
  bool time_since_last_missing = false;  // first match of a user
};

inline constexpr std::int64_t kSessionGapSeconds = 900;  // >= 15 min idle

struct SessionAssignment {
  int session_number = 1;        // 1-based
  int match_index_in_session = 1;
  double time_since_last_match = 0.0;  // seconds; meaningless when missing
  bool time_missing = false;           // user's first match
  bool negative_gap = false;           // overlapping rows, treated as gap 0
};

// One user's matches, chronologically sorted; (start_time, duration) pairs.
// A gap of at least gap_threshold seconds between the end of one match and
// the start of the next begins a new session.
std::vector<SessionAssignment> sessionize(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& start_duration,
    std::int64_t gap_threshold = kSessionGapSeconds,
    std::vector<std::string>* warnings = nullptr);

struct FeatureTable {
  std::vector<PlayerDerivedFeatures> rows;  // grouped by user, time order
  std::vector<std::string> warnings;
};

// Sessionize and roll up per-user history over the full telemetry set.
// Row order: user_id ascending, then start_time ascending.
FeatureTable compute_features(const std::vector<MatchRecord>& matches,
                              const std::vector<PlayerMatchRecord>& player_matches,
                              std::int64_t gap_threshold = kSessionGapSeconds);

// features.csv: user_id, match_id, then all derived columns; missing
// timeSinceLastMatch serialized as an empty field.
void write_features_csv(const std::string& path, const FeatureTable& table);

struct BinningSpec {
  std::string feature;
  bool special_zero_bin = false;
  std::vector<double> percentiles;  // cut points in (0,100), ascending
};

struct BinningResult {
  // Per-value bin id. -1 marks a missing value excluded from binning
  // (only possible without special_zero_bin, which absorbs missing into
  // bin 0 instead).
  std::vector<int> bins;
  std::vector<double> edges;   // realized cut values after deduplication
  std::vector<double> shares;  // population share per bin
  int n_bins = 0;
  std::vector<std::string> warnings;
};

// Percentile binning; NaN encodes a missing value. With special_zero_bin,
// zeros and missing go to bin 0 and the percentile edges are computed over
// the remaining values only. A value equal to an edge lands in the higher
// bin.
BinningResult percentile_bins(const std::vector<double>& values,
                              const BinningSpec& spec);

}  // namespace patchfx
