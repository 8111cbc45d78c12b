#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patchfx/types.hpp"

namespace patchfx {

// One rejected input row. Rows are reported, never silently dropped.
struct RejectRow {
  std::string file;    // basename of the offending table
  std::int64_t line;   // 1-based source line
  std::string reason;
};

struct Telemetry {
  std::vector<MatchRecord> matches;
  std::vector<PlayerMatchRecord> player_matches;
  ChampionCatalog catalog;
  std::vector<RejectRow> rejects;
  std::vector<std::string> warnings;
  std::int64_t rows_seen = 0;  // data rows across both telemetry tables

  double reject_rate() const {
    return rows_seen == 0
               ? 0.0
               : static_cast<double>(rejects.size()) /
                     static_cast<double>(rows_seen);
  }
};

// champions.csv: champion_id,name,champion_type. Malformed rows are hard
// schema errors here — the catalog is reference data, not telemetry.
ChampionCatalog load_champions(const std::string& path);

// Load matches.csv + player_matches.csv against a catalog. Bad rows land
// in rejects with a reason and line number; duplicates keep the first
// occurrence. Player rows must reference a loaded match and a cataloged
// champion.
Telemetry load_telemetry(const std::string& matches_path,
                         const std::string& players_path,
                         const std::string& champions_path);

// Keep ranked 5v5 matches only. Pure.
std::vector<MatchRecord> filter_competitive(
    const std::vector<MatchRecord>& matches);

// Distinct patch versions in numeric (major, minor) order with first-seen
// timestamps. Appends a warning if version order disagrees with first-seen
// time order.
PatchTimeline build_patch_timeline(const std::vector<MatchRecord>& matches,
                                   std::vector<std::string>* warnings = nullptr);

// Champions ranked by pick count descending, ties by catalog name
// ascending. k beyond the distinct-champion count returns all (warning).
std::vector<ChampionId> top_champions(
    const std::vector<PlayerMatchRecord>& player_matches,
    const ChampionCatalog& catalog, std::size_t k,
    std::vector<std::string>* warnings = nullptr);

// rejects.csv (file,line,reason) for a run's reject report.
void write_rejects_csv(const std::string& path,
                       const std::vector<RejectRow>& rejects);

// Validated tables re-serialized in the input schema; loading them back is
// lossless.
void write_matches_csv(const std::string& path,
                       const std::vector<MatchRecord>& matches);
void write_player_matches_csv(const std::string& path,
                              const std::vector<PlayerMatchRecord>& rows);

}  // namespace patchfx
