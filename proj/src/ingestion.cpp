#include "patchfx/ingestion.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "patchfx/csv.hpp"
#include "patchfx/errors.hpp"

namespace patchfx {

namespace {

std::string basename_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

// Integer field or reject-reason; counts must additionally be >= 0.
struct FieldReader {
  const std::vector<std::string>& row;
  std::string* fail_reason;

  std::optional<std::int64_t> integer(std::size_t idx,
                                      const char* reason_if_bad) {
    auto v = parse_int(row[idx]);
    if (!v && fail_reason->empty()) *fail_reason = reason_if_bad;
    return v;
  }

  std::optional<std::int64_t> count(std::size_t idx) {
    auto v = integer(idx, "unparsable count");
    if (v && *v < 0) {
      if (fail_reason->empty()) *fail_reason = "negative count";
      return std::nullopt;
    }
    return v;
  }
};

}  // namespace

ChampionCatalog load_champions(const std::string& path) {
  CsvTable table = read_csv(path);
  std::size_t c_id = table.col("champion_id");
  std::size_t c_name = table.col("name");
  std::size_t c_type = table.col("champion_type");

  ChampionCatalog catalog;
  std::set<std::string> names;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    auto line = std::to_string(table.row_lines[i]);
    if (row.size() != table.header.size()) {
      throw SchemaError("champions row at line " + line +
                        ": wrong field count");
    }
    auto id = parse_int(row[c_id]);
    if (!id) {
      throw SchemaError("champions row at line " + line +
                        ": unparsable champion_id");
    }
    auto type = parse_champion_type(row[c_type]);
    if (!type) {
      throw SchemaError("champions row at line " + line +
                        ": unknown champion_type '" + row[c_type] + "'");
    }
    if (row[c_name].empty()) {
      throw SchemaError("champions row at line " + line + ": empty name");
    }
    if (!catalog.champions.emplace(*id, ChampionInfo{row[c_name], *type})
             .second) {
      throw SchemaError("champions row at line " + line +
                        ": duplicate champion_id " + row[c_id]);
    }
    if (!names.insert(row[c_name]).second) {
      throw SchemaError("champions row at line " + line +
                        ": duplicate champion name '" + row[c_name] + "'");
    }
  }
  return catalog;
}

Telemetry load_telemetry(const std::string& matches_path,
                         const std::string& players_path,
                         const std::string& champions_path) {
  Telemetry out;
  out.catalog = load_champions(champions_path);

  // --- matches.csv ---
  CsvTable mt = read_csv(matches_path);
  const std::string m_file = basename_of(matches_path);
  std::size_t m_id = mt.col("match_id");
  std::size_t m_start = mt.col("start_time");
  std::size_t m_dur = mt.col("duration");
  std::size_t m_patch = mt.col("patch");
  std::size_t m_queue = mt.col("queue_type");
  std::size_t m_map = mt.col("map_mode");
  std::size_t m_season = mt.col("season_id");
  std::size_t m_win = mt.col("winning_team");

  std::unordered_set<std::string> seen_matches;
  for (std::size_t i = 0; i < mt.rows.size(); ++i) {
    ++out.rows_seen;
    const auto& row = mt.rows[i];
    auto reject = [&](std::string reason) {
      out.rejects.push_back({m_file, mt.row_lines[i], std::move(reason)});
    };
    if (row.size() != mt.header.size()) {
      reject("wrong field count");
      continue;
    }
    std::string reason;
    FieldReader f{row, &reason};
    MatchRecord rec;
    rec.match_id = row[m_id];

    auto start = f.integer(m_start, "unparsable timestamp");
    auto dur = f.integer(m_dur, "unparsable duration");
    auto season = f.integer(m_season, "unparsable season");
    auto patch = parse_patch(row[m_patch]);
    auto win = parse_team(row[m_win]);
    if (!patch && reason.empty()) reason = "unparsable patch";
    if (!win && reason.empty()) reason = "unknown team";
    if (reason.empty() && rec.match_id.empty()) reason = "empty match_id";
    if (reason.empty() && *dur <= 0) reason = "nonpositive duration";
    if (!reason.empty()) {
      reject(reason);
      continue;
    }
    if (!seen_matches.insert(rec.match_id).second) {
      reject("duplicate match");
      continue;
    }
    rec.start_time = *start;
    rec.duration = *dur;
    rec.patch = *patch;
    rec.queue_type = parse_queue_type(row[m_queue]);
    rec.map_mode = parse_map_mode(row[m_map]);
    rec.season_id = *season;
    rec.winning_team = *win;
    out.matches.push_back(std::move(rec));
  }

  // --- player_matches.csv ---
  CsvTable pt = read_csv(players_path);
  const std::string p_file = basename_of(players_path);
  std::size_t p_match = pt.col("match_id");
  std::size_t p_user = pt.col("user_id");
  std::size_t p_team = pt.col("team");
  std::size_t p_champ = pt.col("champion");
  std::size_t p_role = pt.col("role");
  std::size_t p_lane = pt.col("lane");
  std::size_t p_k = pt.col("kills");
  std::size_t p_d = pt.col("deaths");
  std::size_t p_a = pt.col("assists");
  std::size_t p_ge = pt.col("gold_earned");
  std::size_t p_gs = pt.col("gold_spent");
  std::size_t p_lvl = pt.col("champ_level");
  std::size_t p_tier = pt.col("highest_prev_season_tier");

  std::unordered_set<std::string> seen_units;
  for (std::size_t i = 0; i < pt.rows.size(); ++i) {
    ++out.rows_seen;
    const auto& row = pt.rows[i];
    auto reject = [&](std::string reason) {
      out.rejects.push_back({p_file, pt.row_lines[i], std::move(reason)});
    };
    if (row.size() != pt.header.size()) {
      reject("wrong field count");
      continue;
    }
    std::string reason;
    FieldReader f{row, &reason};
    PlayerMatchRecord rec;
    rec.match_id = row[p_match];
    rec.user_id = row[p_user];

    auto team = parse_team(row[p_team]);
    auto champ = f.integer(p_champ, "unparsable champion");
    auto kills = f.count(p_k);
    auto deaths = f.count(p_d);
    auto assists = f.count(p_a);
    auto ge = f.count(p_ge);
    auto gs = f.count(p_gs);
    auto lvl = f.integer(p_lvl, "unparsable count");
    auto tier = parse_tier_ordinal(row[p_tier]);
    if (!team && reason.empty()) reason = "unknown team";
    if (!tier && reason.empty()) reason = "unknown tier";
    if (reason.empty() && (rec.match_id.empty() || rec.user_id.empty())) {
      reason = "empty identifier";
    }
    if (reason.empty() && !seen_matches.count(rec.match_id)) {
      reason = "unknown match";
    }
    if (reason.empty() && champ && !out.catalog.contains(*champ)) {
      reason = "unknown champion";
    }
    if (reason.empty() && (*lvl < 1 || *lvl > 18)) {
      reason = "champ_level out of range";
    }
    if (!reason.empty()) {
      reject(reason);
      continue;
    }
    if (!seen_units.insert(rec.match_id + "\x1f" + rec.user_id).second) {
      reject("duplicate unit");
      continue;
    }
    rec.team = *team;
    rec.champion = *champ;
    rec.role = row[p_role];
    rec.lane = row[p_lane];
    rec.kills = *kills;
    rec.deaths = *deaths;
    rec.assists = *assists;
    rec.gold_earned = *ge;
    rec.gold_spent = *gs;
    rec.champ_level = static_cast<int>(*lvl);
    rec.tier_ordinal = *tier;
    out.player_matches.push_back(std::move(rec));
  }

  return out;
}

std::vector<MatchRecord> filter_competitive(
    const std::vector<MatchRecord>& matches) {
  std::vector<MatchRecord> out;
  for (const auto& m : matches) {
    if (m.queue_type == QueueType::ranked &&
        m.map_mode == MapMode::five_v_five) {
      out.push_back(m);
    }
  }
  return out;
}

PatchTimeline build_patch_timeline(const std::vector<MatchRecord>& matches,
                                   std::vector<std::string>* warnings) {
  std::map<PatchVersion, std::int64_t> first_seen;
  for (const auto& m : matches) {
    auto [it, inserted] = first_seen.emplace(m.patch, m.start_time);
    if (!inserted) it->second = std::min(it->second, m.start_time);
  }
  PatchTimeline timeline;
  for (const auto& [version, seen] : first_seen) {
    timeline.entries.push_back({version, seen});
  }
  for (std::size_t i = 0; i + 1 < timeline.entries.size(); ++i) {
    if (timeline.entries[i].first_seen > timeline.entries[i + 1].first_seen) {
      if (warnings) {
        warnings->push_back("patch " + timeline.entries[i].version.str() +
                            " first seen after " +
                            timeline.entries[i + 1].version.str() +
                            "; version order kept");
      }
    }
  }
  return timeline;
}

std::vector<ChampionId> top_champions(
    const std::vector<PlayerMatchRecord>& player_matches,
    const ChampionCatalog& catalog, std::size_t k,
    std::vector<std::string>* warnings) {
  if (k < 1) throw ConfigError("top_champions requires k >= 1");
  std::unordered_map<ChampionId, std::int64_t> picks;
  for (const auto& pm : player_matches) ++picks[pm.champion];

  std::vector<ChampionId> ids;
  ids.reserve(picks.size());
  for (const auto& [id, _] : picks) ids.push_back(id);
  std::sort(ids.begin(), ids.end(), [&](ChampionId a, ChampionId b) {
    auto pa = picks[a], pb = picks[b];
    if (pa != pb) return pa > pb;
    return catalog.at(a).name < catalog.at(b).name;
  });
  if (k < ids.size()) {
    ids.resize(k);
  } else if (k > ids.size() && warnings) {
    warnings->push_back("requested top " + std::to_string(k) +
                        " champions but only " + std::to_string(ids.size()) +
                        " distinct champions present; returning all");
  }
  return ids;
}

void write_rejects_csv(const std::string& path,
                       const std::vector<RejectRow>& rejects) {
  CsvTable table;
  table.header = {"file", "line", "reason"};
  for (const auto& r : rejects) {
    table.rows.push_back({r.file, std::to_string(r.line), r.reason});
  }
  write_csv(path, table);
}

void write_matches_csv(const std::string& path,
                       const std::vector<MatchRecord>& matches) {
  CsvTable table;
  table.header = {"match_id", "start_time", "duration",  "patch",
                  "queue_type", "map_mode", "season_id", "winning_team"};
  for (const auto& m : matches) {
    table.rows.push_back({m.match_id, std::to_string(m.start_time),
                          std::to_string(m.duration), m.patch.str(),
                          to_string(m.queue_type), to_string(m.map_mode),
                          std::to_string(m.season_id),
                          to_string(m.winning_team)});
  }
  write_csv(path, table);
}

void write_player_matches_csv(const std::string& path,
                              const std::vector<PlayerMatchRecord>& rows) {
  CsvTable table;
  table.header = {"match_id", "user_id",     "team",       "champion",
                  "role",     "lane",        "kills",      "deaths",
                  "assists",  "gold_earned", "gold_spent", "champ_level",
                  "highest_prev_season_tier"};
  for (const auto& pm : rows) {
    table.rows.push_back(
        {pm.match_id, pm.user_id, to_string(pm.team),
         std::to_string(pm.champion), pm.role, pm.lane,
         std::to_string(pm.kills), std::to_string(pm.deaths),
         std::to_string(pm.assists), std::to_string(pm.gold_earned),
         std::to_string(pm.gold_spent), std::to_string(pm.champ_level),
         tier_token(pm.tier_ordinal)});
  }
  write_csv(path, table);
}

}  // namespace patchfx
