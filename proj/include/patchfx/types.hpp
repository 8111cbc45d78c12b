#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace patchfx {

enum class Team { blue, red };
enum class QueueType { ranked, normal, other };
enum class MapMode { five_v_five, three_v_three, other };

// Seven disjoint champion classes.
enum class ChampionType {
  controller,
  fighter,
  mage,
  marksman,
  slayer,
  tank,
  unique,
};

using ChampionId = std::int64_t;

inline constexpr int kChampionTypeCount = 7;

const char* to_string(Team t);
const char* to_string(QueueType q);
const char* to_string(MapMode m);
const char* to_string(ChampionType c);

std::optional<Team> parse_team(const std::string& s);
QueueType parse_queue_type(const std::string& s);  // unknown tokens -> other
MapMode parse_map_mode(const std::string& s);      // unknown tokens -> other
std::optional<ChampionType> parse_champion_type(const std::string& s);

// Previous-season rank as an ordinal: unranked/missing 0, bronze 1 ...
// challenger 7. Unknown token -> nullopt.
std::optional<int> parse_tier_ordinal(const std::string& s);
// Canonical token for a tier ordinal (round-trips through the parser).
const char* tier_token(int ordinal);
inline constexpr int kTierMax = 7;

// Game version "X.Y", ordered numerically (4.10 > 4.9).
struct PatchVersion {
  int major = 0;
  int minor = 0;

  auto operator<=>(const PatchVersion&) const = default;
  std::string str() const;
};

// Strict "X.Y" parse; nullopt for anything else.
std::optional<PatchVersion> parse_patch(const std::string& s);

struct MatchRecord {
  std::string match_id;
  std::int64_t start_time = 0;  // Unix seconds
  std::int64_t duration = 0;    // seconds, > 0
  PatchVersion patch;
  QueueType queue_type = QueueType::other;
  MapMode map_mode = MapMode::other;
  std::int64_t season_id = 0;
  Team winning_team = Team::blue;
};

struct PlayerMatchRecord {
  std::string match_id;
  std::string user_id;
  Team team = Team::blue;
  ChampionId champion = 0;
  std::string role;
  std::string lane;
  std::int64_t kills = 0;
  std::int64_t deaths = 0;
  std::int64_t assists = 0;
  std::int64_t gold_earned = 0;
  std::int64_t gold_spent = 0;
  int champ_level = 1;  // 1..18
  int tier_ordinal = 0; // 0 = unranked or not reported
};

struct ChampionInfo {
  std::string name;
  ChampionType type = ChampionType::unique;
};

struct ChampionCatalog {
  std::map<ChampionId, ChampionInfo> champions;

  bool contains(ChampionId id) const { return champions.count(id) > 0; }
  const ChampionInfo& at(ChampionId id) const;
};

struct PatchTimeline {
  struct Entry {
    PatchVersion version;
    std::int64_t first_seen = 0;  // earliest match start_time on this patch
  };
  std::vector<Entry> entries;  // strictly ascending by version

  // Consecutive (w_t, w_{t+1}) pairs in timeline order.
  std::vector<std::pair<PatchVersion, PatchVersion>> consecutive_pairs() const;
};

}  // namespace patchfx
