#include "patchfx/features.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <unordered_map>

#include "patchfx/csv.hpp"
#include "patchfx/errors.hpp"

namespace patchfx {

const std::array<std::string, kPlayerFeatureCount>& player_feature_names() {
  static const std::array<std::string, kPlayerFeatureCount> names = {
      "timeSinceLastMatch",
      "sessionNumber",
      "matchIndexInSession",
      "matchesPlayedSoFar",
      "cumKillsAtStart",
      "cumDeathsAtStart",
      "cumAssistsAtStart",
      "cumGoldEarnedAtStart",
      "cumGoldSpentAtStart",
      "cumMatchDurationAtStart",
      "cumWinsAtStart",
      "meanKillsAtStart",
      "meanDeathsAtStart",
      "meanAssistsAtStart",
      "meanKdaAtStart",
      "meanGoldEarnedAtStart",
      "meanGoldSpentAtStart",
      "meanMatchDurationAtStart",
      "meanWinsAtStart",
      "meanChampLevelAtStart",
      "sessionCumKillsAtStart",
      "sessionCumDeathsAtStart",
      "sessionCumAssistsAtStart",
      "sessionCumGoldEarnedAtStart",
      "sessionCumGoldSpentAtStart",
      "sessionCumMatchDurationAtStart",
      "sessionCumWinsAtStart",
      "sessionMeanKillsAtStart",
      "sessionMeanDeathsAtStart",
      "sessionMeanAssistsAtStart",
      "sessionMeanKdaAtStart",
      "sessionMeanGoldEarnedAtStart",
      "sessionMeanGoldSpentAtStart",
      "sessionMeanMatchDurationAtStart",
      "sessionMeanWinsAtStart",
      "sessionMeanChampLevelAtStart",
      "highestAchievedSeasonTier",
  };
  return names;
}

std::vector<SessionAssignment> sessionize(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& start_duration,
    std::int64_t gap_threshold, std::vector<std::string>* warnings) {
  std::vector<SessionAssignment> out;
  out.reserve(start_duration.size());
  int session = 1;
  int index = 0;
  for (std::size_t i = 0; i < start_duration.size(); ++i) {
    SessionAssignment a;
    if (i == 0) {
      a.time_missing = true;
      index = 1;
    } else {
      auto [prev_start, prev_dur] = start_duration[i - 1];
      std::int64_t gap = start_duration[i].first - (prev_start + prev_dur);
      if (gap < 0) {
        a.negative_gap = true;
        if (warnings) {
          warnings->push_back("overlapping matches at position " +
                              std::to_string(i) + "; gap clamped to 0");
        }
        gap = 0;
      }
      a.time_since_last_match = static_cast<double>(gap);
      if (gap >= gap_threshold) {  // a break of >= threshold: new session
        ++session;
        index = 1;
      } else {
        ++index;
      }
    }
    a.session_number = session;
    a.match_index_in_session = index;
    out.push_back(a);
  }
  return out;
}

namespace {

// A user's view of one match, joined with outcome.
struct UserMatch {
  const PlayerMatchRecord* pm;
  const MatchRecord* m;
  bool won;
};

struct RunningTotals {
  double n = 0, kills = 0, deaths = 0, assists = 0, gold_earned = 0,
         gold_spent = 0, duration = 0, wins = 0, kda = 0, champ_level = 0;

  void add(const UserMatch& um) {
    n += 1;
    kills += static_cast<double>(um.pm->kills);
    deaths += static_cast<double>(um.pm->deaths);
    assists += static_cast<double>(um.pm->assists);
    gold_earned += static_cast<double>(um.pm->gold_earned);
    gold_spent += static_cast<double>(um.pm->gold_spent);
    duration += static_cast<double>(um.m->duration);
    wins += um.won ? 1.0 : 0.0;
    kda += static_cast<double>(um.pm->kills + um.pm->assists) /
           static_cast<double>(std::max<std::int64_t>(um.pm->deaths, 1));
    champ_level += static_cast<double>(um.pm->champ_level);
  }

  double mean(double total) const { return n > 0 ? total / n : 0.0; }
};

}  // namespace

FeatureTable compute_features(
    const std::vector<MatchRecord>& matches,
    const std::vector<PlayerMatchRecord>& player_matches,
    std::int64_t gap_threshold) {
  FeatureTable table;

  std::unordered_map<std::string, const MatchRecord*> by_match;
  for (const auto& m : matches) by_match[m.match_id] = &m;

  std::map<std::string, std::vector<UserMatch>> by_user;
  for (const auto& pm : player_matches) {
    auto it = by_match.find(pm.match_id);
    if (it == by_match.end()) continue;  // ingest already rejected these
    bool won = it->second->winning_team == pm.team;
    by_user[pm.user_id].push_back({&pm, it->second, won});
  }

  for (auto& [user_id, ums] : by_user) {
    std::stable_sort(ums.begin(), ums.end(),
                     [](const UserMatch& a, const UserMatch& b) {
                       return a.m->start_time < b.m->start_time;
                     });
    std::vector<std::pair<std::int64_t, std::int64_t>> times;
    times.reserve(ums.size());
    for (const auto& um : ums) {
      times.emplace_back(um.m->start_time, um.m->duration);
    }
    auto sessions = sessionize(times, gap_threshold, &table.warnings);

    RunningTotals all;
    RunningTotals sess;
    for (std::size_t i = 0; i < ums.size(); ++i) {
      if (i > 0 && sessions[i].session_number != sessions[i - 1].session_number) {
        sess = RunningTotals{};
      }
      PlayerDerivedFeatures row;
      row.user_id = user_id;
      row.match_id = ums[i].pm->match_id;
      row.time_since_last_missing = sessions[i].time_missing;
      auto& v = row.values;
      v[kTimeSinceLastMatch] = sessions[i].time_missing
                                   ? std::nan("")
                                   : sessions[i].time_since_last_match;
      v[kSessionNumber] = sessions[i].session_number;
      v[kMatchIndexInSession] = sessions[i].match_index_in_session;
      v[kMatchesPlayedSoFar] = all.n;
      v[kCumKillsAtStart] = all.kills;
      v[kCumDeathsAtStart] = all.deaths;
      v[kCumAssistsAtStart] = all.assists;
      v[kCumGoldEarnedAtStart] = all.gold_earned;
      v[kCumGoldSpentAtStart] = all.gold_spent;
      v[kCumMatchDurationAtStart] = all.duration;
      v[kCumWinsAtStart] = all.wins;
      v[kMeanKillsAtStart] = all.mean(all.kills);
      v[kMeanDeathsAtStart] = all.mean(all.deaths);
      v[kMeanAssistsAtStart] = all.mean(all.assists);
      v[kMeanKdaAtStart] = all.mean(all.kda);
      v[kMeanGoldEarnedAtStart] = all.mean(all.gold_earned);
      v[kMeanGoldSpentAtStart] = all.mean(all.gold_spent);
      v[kMeanMatchDurationAtStart] = all.mean(all.duration);
      v[kMeanWinsAtStart] = all.mean(all.wins);
      v[kMeanChampLevelAtStart] = all.mean(all.champ_level);
      v[kSessionCumKillsAtStart] = sess.kills;
      v[kSessionCumDeathsAtStart] = sess.deaths;
      v[kSessionCumAssistsAtStart] = sess.assists;
      v[kSessionCumGoldEarnedAtStart] = sess.gold_earned;
      v[kSessionCumGoldSpentAtStart] = sess.gold_spent;
      v[kSessionCumMatchDurationAtStart] = sess.duration;
      v[kSessionCumWinsAtStart] = sess.wins;
      v[kSessionMeanKillsAtStart] = sess.mean(sess.kills);
      v[kSessionMeanDeathsAtStart] = sess.mean(sess.deaths);
      v[kSessionMeanAssistsAtStart] = sess.mean(sess.assists);
      v[kSessionMeanKdaAtStart] = sess.mean(sess.kda);
      v[kSessionMeanGoldEarnedAtStart] = sess.mean(sess.gold_earned);
      v[kSessionMeanGoldSpentAtStart] = sess.mean(sess.gold_spent);
      v[kSessionMeanMatchDurationAtStart] = sess.mean(sess.duration);
      v[kSessionMeanWinsAtStart] = sess.mean(sess.wins);
      v[kSessionMeanChampLevelAtStart] = sess.mean(sess.champ_level);
      v[kHighestAchievedSeasonTier] = ums[i].pm->tier_ordinal;
      table.rows.push_back(std::move(row));

      all.add(ums[i]);
      sess.add(ums[i]);
    }
  }
  return table;
}

void write_features_csv(const std::string& path, const FeatureTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write features file: " + path);
  std::vector<std::string> header = {"user_id", "match_id"};
  for (const auto& name : player_feature_names()) header.push_back(name);
  out << join_csv_row(header);

  std::vector<std::string> fields;
  for (const auto& row : table.rows) {
    fields.clear();
    fields.push_back(row.user_id);
    fields.push_back(row.match_id);
    for (int f = 0; f < kPlayerFeatureCount; ++f) {
      if (f == kTimeSinceLastMatch && row.time_since_last_missing) {
        fields.emplace_back();
      } else {
        fields.push_back(format_double(row.values[f]));
      }
    }
    out << join_csv_row(fields);
  }
  if (!out) throw SchemaError("write failed: " + path);
}

BinningResult percentile_bins(const std::vector<double>& values,
                              const BinningSpec& spec) {
  for (std::size_t i = 0; i + 1 < spec.percentiles.size(); ++i) {
    if (spec.percentiles[i] >= spec.percentiles[i + 1]) {
      throw ConfigError("binning percentiles must be strictly increasing");
    }
  }
  for (double p : spec.percentiles) {
    if (p <= 0.0 || p >= 100.0) {
      throw ConfigError("binning percentiles must lie in (0,100)");
    }
  }

  BinningResult res;
  res.bins.assign(values.size(), -1);

  std::vector<double> pool;  // values percentiles are computed over
  pool.reserve(values.size());
  for (double v : values) {
    if (std::isnan(v)) continue;
    if (spec.special_zero_bin && v == 0.0) continue;
    pool.push_back(v);
  }
  std::sort(pool.begin(), pool.end());

  res.edges.clear();
  if (!pool.empty()) {
    for (double p : spec.percentiles) {
      // Linear interpolation between closest ranks.
      double rank = p / 100.0 * static_cast<double>(pool.size() - 1);
      auto lo = static_cast<std::size_t>(std::floor(rank));
      auto hi = static_cast<std::size_t>(std::ceil(rank));
      double frac = rank - static_cast<double>(lo);
      res.edges.push_back(pool[lo] + frac * (pool[hi] - pool[lo]));
    }
    auto last = std::unique(res.edges.begin(), res.edges.end());
    if (last != res.edges.end()) {
      res.edges.erase(last, res.edges.end());
      res.warnings.push_back("duplicate percentile edges collapsed for " +
                             spec.feature);
    }
  }

  int base = spec.special_zero_bin ? 1 : 0;
  res.n_bins = base + static_cast<int>(res.edges.size()) + 1;

  std::vector<std::int64_t> counts(res.n_bins, 0);
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double v = values[i];
    if (std::isnan(v)) {
      if (spec.special_zero_bin) {
        res.bins[i] = 0;
        ++counts[0];
        ++assigned;
      }
      continue;  // without a zero bin, missing stays unbinned (-1)
    }
    if (spec.special_zero_bin && v == 0.0) {
      res.bins[i] = 0;
      ++counts[0];
      ++assigned;
      continue;
    }
    // Value at or above an edge belongs to the higher bin.
    int b = base;
    for (double e : res.edges) {
      if (v >= e) ++b;
      else break;
    }
    res.bins[i] = b;
    ++counts[b];
    ++assigned;
  }

  res.shares.assign(res.n_bins, 0.0);
  if (assigned > 0) {
    for (int b = 0; b < res.n_bins; ++b) {
      res.shares[b] = static_cast<double>(counts[b]) /
                      static_cast<double>(assigned);
    }
  }
  return res;
}

}  // namespace patchfx
