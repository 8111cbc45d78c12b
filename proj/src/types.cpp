#include "patchfx/types.hpp"

#include <algorithm>
#include <cctype>

#include "patchfx/csv.hpp"
#include "patchfx/errors.hpp"

namespace patchfx {

namespace {

std::string lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

const char* to_string(Team t) { return t == Team::blue ? "blue" : "red"; }

const char* to_string(QueueType q) {
  switch (q) {
    case QueueType::ranked: return "ranked";
    case QueueType::normal: return "normal";
    default: return "other";
  }
}

const char* to_string(MapMode m) {
  switch (m) {
    case MapMode::five_v_five: return "five_v_five";
    case MapMode::three_v_three: return "three_v_three";
    default: return "other";
  }
}

const char* to_string(ChampionType c) {
  switch (c) {
    case ChampionType::controller: return "controller";
    case ChampionType::fighter: return "fighter";
    case ChampionType::mage: return "mage";
    case ChampionType::marksman: return "marksman";
    case ChampionType::slayer: return "slayer";
    case ChampionType::tank: return "tank";
    default: return "unique";
  }
}

std::optional<Team> parse_team(const std::string& s) {
  if (s == "blue") return Team::blue;
  if (s == "red") return Team::red;
  return std::nullopt;
}

QueueType parse_queue_type(const std::string& s) {
  if (s == "ranked") return QueueType::ranked;
  if (s == "normal") return QueueType::normal;
  return QueueType::other;
}

MapMode parse_map_mode(const std::string& s) {
  if (s == "five_v_five") return MapMode::five_v_five;
  if (s == "three_v_three") return MapMode::three_v_three;
  return MapMode::other;
}

std::optional<ChampionType> parse_champion_type(const std::string& s) {
  static const std::map<std::string, ChampionType> table = {
      {"controller", ChampionType::controller},
      {"fighter", ChampionType::fighter},
      {"mage", ChampionType::mage},
      {"marksman", ChampionType::marksman},
      {"slayer", ChampionType::slayer},
      {"tank", ChampionType::tank},
      {"unique", ChampionType::unique},
  };
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::optional<int> parse_tier_ordinal(const std::string& s) {
  static const std::map<std::string, int> table = {
      {"", 0},         {"unranked", 0}, {"bronze", 1}, {"silver", 2},
      {"gold", 3},     {"platinum", 4}, {"diamond", 5}, {"master", 6},
      {"challenger", 7},
  };
  auto it = table.find(lower(s));
  if (it == table.end()) return std::nullopt;
  return it->second;
}

const char* tier_token(int ordinal) {
  static const char* tokens[] = {"unranked", "bronze",  "silver",
                                 "gold",     "platinum", "diamond",
                                 "master",   "challenger"};
  if (ordinal < 0 || ordinal > kTierMax) {
    throw InternalError("tier ordinal out of range: " +
                        std::to_string(ordinal));
  }
  return tokens[ordinal];
}

std::string PatchVersion::str() const {
  return std::to_string(major) + "." + std::to_string(minor);
}

std::optional<PatchVersion> parse_patch(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 >= s.size()) {
    return std::nullopt;
  }
  if (s.find('.', dot + 1) != std::string::npos) return std::nullopt;
  auto major = parse_int(s.substr(0, dot));
  auto minor = parse_int(s.substr(dot + 1));
  if (!major || !minor || *major < 0 || *minor < 0) return std::nullopt;
  // Reject forms strtoll would accept but "X.Y" should not ("+4", " 4").
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.') {
      return std::nullopt;
    }
  }
  return PatchVersion{static_cast<int>(*major), static_cast<int>(*minor)};
}

const ChampionInfo& ChampionCatalog::at(ChampionId id) const {
  auto it = champions.find(id);
  if (it == champions.end()) {
    throw SchemaError("champion id not in catalog: " + std::to_string(id));
  }
  return it->second;
}

std::vector<std::pair<PatchVersion, PatchVersion>>
PatchTimeline::consecutive_pairs() const {
  std::vector<std::pair<PatchVersion, PatchVersion>> pairs;
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    pairs.emplace_back(entries[i].version, entries[i + 1].version);
  }
  return pairs;
}

}  // namespace patchfx
