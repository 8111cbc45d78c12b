#include "patchfx/frames.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <unordered_map>

#include "json.hpp"
#include "patchfx/csv.hpp"
#include "patchfx/errors.hpp"
#include "patchfx/hash.hpp"

namespace patchfx {

const char* to_string(FeatureKind k) {
  switch (k) {
    case FeatureKind::binary: return "binary";
    case FeatureKind::count: return "count";
    case FeatureKind::continuous: return "continuous";
    default: return "ordinal";
  }
}

const char* to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::binary_win: return "binary_win";
    case OutcomeKind::count_kills: return "count_kills";
    default: return "continuous";
  }
}

FeatureKind parse_feature_kind(const std::string& s) {
  if (s == "binary") return FeatureKind::binary;
  if (s == "count") return FeatureKind::count;
  if (s == "continuous") return FeatureKind::continuous;
  if (s == "ordinal") return FeatureKind::ordinal;
  throw SchemaError("unknown feature kind: " + s);
}

OutcomeKind parse_outcome_kind(const std::string& s) {
  if (s == "binary_win") return OutcomeKind::binary_win;
  if (s == "count_kills") return OutcomeKind::count_kills;
  if (s == "continuous") return OutcomeKind::continuous;
  throw SchemaError("unknown outcome kind: " + s);
}

std::int64_t TreatmentFrame::n_treated() const {
  std::int64_t n = 0;
  for (auto v : w) n += v;
  return n;
}

std::int64_t TreatmentFrame::n_control() const {
  return static_cast<std::int64_t>(w.size()) - n_treated();
}

void TreatmentFrame::validate() const {
  if (feature_names.size() != feature_kinds.size() ||
      feature_names.size() != columns.size()) {
    throw InternalError("frame schema arrays disagree in length");
  }
  if (w.size() != y.size()) {
    throw InternalError("frame w/y length mismatch");
  }
  for (const auto& col : columns) {
    if (col.size() != y.size()) {
      throw InternalError("frame column length mismatch");
    }
  }
  for (auto v : w) {
    if (v != 0 && v != 1) throw InternalError("frame treatment not binary");
  }
}

std::string TreatmentFrame::to_csv() const {
  std::vector<std::string> header = feature_names;
  header.push_back("w");
  header.push_back("y");
  std::string out = join_csv_row(header);
  std::vector<std::string> fields;
  for (std::size_t r = 0; r < n_rows(); ++r) {
    fields.clear();
    for (std::size_t f = 0; f < columns.size(); ++f) {
      fields.push_back(format_double(columns[f][r]));
    }
    fields.push_back(w[r] ? "1" : "0");
    fields.push_back(format_double(y[r]));
    out += join_csv_row(fields);
  }
  return out;
}

std::string TreatmentFrame::fingerprint() const {
  return sha256_hex(to_csv());
}

TreatmentFrame build_team_frame(
    const std::vector<MatchRecord>& matches,
    const std::vector<PlayerMatchRecord>& player_matches,
    const ChampionCatalog& catalog, PatchVersion control_patch,
    PatchVersion treated_patch, std::vector<std::string>* warnings) {
  TreatmentFrame frame;
  frame.outcome_kind = OutcomeKind::binary_win;
  frame.control_patch = control_patch.str();
  frame.treated_patch = treated_patch.str();
  frame.label = "team";

  // Champion indicators in name order, then type counts.
  std::vector<std::pair<std::string, ChampionId>> by_name;
  for (const auto& [id, info] : catalog.champions) {
    by_name.emplace_back(info.name, id);
  }
  std::sort(by_name.begin(), by_name.end());
  std::unordered_map<ChampionId, std::size_t> champ_col;
  for (const auto& [name, id] : by_name) {
    champ_col[id] = frame.feature_names.size();
    frame.feature_names.push_back("team_has_" + name);
    frame.feature_kinds.push_back(FeatureKind::binary);
  }
  std::size_t type_base = frame.feature_names.size();
  for (int t = 0; t < kChampionTypeCount; ++t) {
    frame.feature_names.push_back(
        std::string("team_n_") + to_string(static_cast<ChampionType>(t)));
    frame.feature_kinds.push_back(FeatureKind::count);
  }
  frame.columns.assign(frame.feature_names.size(), {});

  std::unordered_map<std::string, std::vector<const PlayerMatchRecord*>>
      players_by_match;
  for (const auto& pm : player_matches) {
    players_by_match[pm.match_id].push_back(&pm);
  }

  for (const auto& m : matches) {
    bool treated;
    if (m.patch == treated_patch) treated = true;
    else if (m.patch == control_patch) treated = false;
    else continue;

    auto it = players_by_match.find(m.match_id);
    const auto* roster = it == players_by_match.end() ? nullptr : &it->second;
    std::vector<const PlayerMatchRecord*> sides[2];
    if (roster) {
      for (const auto* pm : *roster) {
        sides[pm->team == Team::red ? 1 : 0].push_back(pm);
      }
    }
    if (sides[0].size() != 5 || sides[1].size() != 5) {
      if (warnings) {
        warnings->push_back("match " + m.match_id +
                            " skipped: teams not five a side");
      }
      continue;
    }
    for (int s = 0; s < 2; ++s) {
      Team team = s == 0 ? Team::blue : Team::red;
      for (auto& col : frame.columns) col.push_back(0.0);
      std::size_t row = frame.columns[0].size() - 1;
      for (const auto* pm : sides[s]) {
        frame.columns[champ_col.at(pm->champion)][row] = 1.0;
        auto type_idx = static_cast<std::size_t>(catalog.at(pm->champion).type);
        frame.columns[type_base + type_idx][row] += 1.0;
      }
      frame.w.push_back(treated ? 1 : 0);
      frame.y.push_back(m.winning_team == team ? 1.0 : 0.0);
    }
  }

  if (frame.n_treated() == 0 || frame.n_control() == 0) {
    throw FrameError("degenerate treatment arm");
  }
  frame.validate();
  return frame;
}

TreatmentFrame build_player_frame(
    const std::vector<MatchRecord>& matches,
    const std::vector<PlayerMatchRecord>& player_matches,
    const FeatureTable& features, const ChampionCatalog& catalog,
    ChampionId champion, PatchVersion control_patch,
    PatchVersion treated_patch) {
  if (!catalog.contains(champion)) {
    throw SchemaError("champion id not in catalog: " +
                      std::to_string(champion));
  }
  TreatmentFrame frame;
  frame.outcome_kind = OutcomeKind::count_kills;
  frame.control_patch = control_patch.str();
  frame.treated_patch = treated_patch.str();
  frame.label = catalog.at(champion).name;
  for (int f = 0; f < kPlayerFeatureCount; ++f) {
    frame.feature_names.push_back(player_feature_names()[f]);
    if (f == kHighestAchievedSeasonTier) {
      frame.feature_kinds.push_back(FeatureKind::ordinal);
    } else if (f == kTimeSinceLastMatch || f >= kMeanKillsAtStart) {
      frame.feature_kinds.push_back(FeatureKind::continuous);
    } else {
      frame.feature_kinds.push_back(FeatureKind::count);
    }
  }
  // Session means sit after session cums in the enum; mark counts correctly.
  for (int f = kSessionCumKillsAtStart; f <= kSessionCumWinsAtStart; ++f) {
    frame.feature_kinds[f] = FeatureKind::count;
  }
  frame.columns.assign(frame.feature_names.size(), {});

  std::unordered_map<std::string, const MatchRecord*> by_match;
  for (const auto& m : matches) by_match[m.match_id] = &m;
  std::unordered_map<std::string, const PlayerDerivedFeatures*> by_unit;
  for (const auto& row : features.rows) {
    by_unit[row.user_id + "\x1f" + row.match_id] = &row;
  }

  for (const auto& pm : player_matches) {
    if (pm.champion != champion) continue;
    auto mit = by_match.find(pm.match_id);
    if (mit == by_match.end()) continue;
    const auto& m = *mit->second;
    bool treated;
    if (m.patch == treated_patch) treated = true;
    else if (m.patch == control_patch) treated = false;
    else continue;

    auto fit = by_unit.find(pm.user_id + "\x1f" + pm.match_id);
    if (fit == by_unit.end()) {
      throw InternalError("derived features missing for unit " + pm.user_id +
                          "/" + pm.match_id);
    }
    const auto& feat = *fit->second;
    for (int f = 0; f < kPlayerFeatureCount; ++f) {
      double v = feat.values[f];
      // Missing first-match gap encodes as 0, the value the zero bin and
      // split conventions expect.
      if (f == kTimeSinceLastMatch && feat.time_since_last_missing) v = 0.0;
      frame.columns[f].push_back(v);
    }
    frame.w.push_back(treated ? 1 : 0);
    frame.y.push_back(static_cast<double>(pm.kills));
  }

  if (frame.n_rows() == 0) {
    throw FrameError("empty frame: champion " + frame.label +
                     " absent from both patches");
  }
  if (frame.n_treated() == 0 || frame.n_control() == 0) {
    throw FrameError("degenerate treatment arm");
  }
  frame.validate();
  return frame;
}

std::vector<BatchFrame> batch_frames(
    const std::vector<MatchRecord>& matches,
    const std::vector<PlayerMatchRecord>& player_matches,
    const FeatureTable& features, const ChampionCatalog& catalog,
    const std::vector<ChampionId>& champions, const PatchTimeline& timeline,
    std::int64_t min_rows_per_arm, std::vector<std::string>* skip_log) {
  std::vector<BatchFrame> out;
  auto pairs = timeline.consecutive_pairs();
  for (ChampionId champ : champions) {
    const std::string& name = catalog.at(champ).name;
    for (const auto& [wt, wt1] : pairs) {
      auto skip = [&](const std::string& reason) {
        if (skip_log) {
          skip_log->push_back(name + " " + wt.str() + "->" + wt1.str() +
                              ": " + reason);
        }
      };
      try {
        BatchFrame bf;
        bf.champion = champ;
        bf.champion_name = name;
        bf.control_patch = wt;
        bf.treated_patch = wt1;
        bf.frame = build_player_frame(matches, player_matches, features,
                                      catalog, champ, wt, wt1);
        if (bf.frame.n_treated() < min_rows_per_arm ||
            bf.frame.n_control() < min_rows_per_arm) {
          skip("arm below minimum of " + std::to_string(min_rows_per_arm));
          continue;
        }
        out.push_back(std::move(bf));
      } catch (const FrameError& e) {
        skip(e.what());
      }
    }
  }
  return out;
}

void write_frame(const std::string& csv_path, const TreatmentFrame& frame) {
  frame.validate();
  std::ofstream out(csv_path, std::ios::binary);
  if (!out) throw SchemaError("cannot write frame file: " + csv_path);
  out << frame.to_csv();
  if (!out) throw SchemaError("write failed: " + csv_path);

  nlohmann::json side;
  side["schema"] = nlohmann::json::array();
  for (std::size_t f = 0; f < frame.feature_names.size(); ++f) {
    side["schema"].push_back({{"name", frame.feature_names[f]},
                              {"kind", to_string(frame.feature_kinds[f])}});
  }
  side["outcome_kind"] = to_string(frame.outcome_kind);
  side["control_patch"] = frame.control_patch;
  side["treated_patch"] = frame.treated_patch;
  side["label"] = frame.label;
  side["n_treated"] = frame.n_treated();
  side["n_control"] = frame.n_control();
  side["frame_sha256"] = frame.fingerprint();

  std::string json_path = csv_path;
  if (json_path.size() > 4 && json_path.ends_with(".csv")) {
    json_path.resize(json_path.size() - 4);
  }
  json_path += ".json";
  std::ofstream jout(json_path, std::ios::binary);
  if (!jout) throw SchemaError("cannot write frame sidecar: " + json_path);
  jout << side.dump(2) << "\n";
}

TreatmentFrame load_frame(const std::string& csv_path) {
  std::string json_path = csv_path;
  if (json_path.size() > 4 && json_path.ends_with(".csv")) {
    json_path.resize(json_path.size() - 4);
  }
  json_path += ".json";
  std::ifstream jin(json_path, std::ios::binary);
  if (!jin) throw SchemaError("missing frame sidecar: " + json_path);
  nlohmann::json side;
  try {
    jin >> side;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("bad frame sidecar " + json_path + ": " + e.what());
  }

  TreatmentFrame frame;
  try {
    for (const auto& item : side.at("schema")) {
      frame.feature_names.push_back(item.at("name").get<std::string>());
      frame.feature_kinds.push_back(
          parse_feature_kind(item.at("kind").get<std::string>()));
    }
    frame.outcome_kind =
        parse_outcome_kind(side.at("outcome_kind").get<std::string>());
    frame.control_patch = side.at("control_patch").get<std::string>();
    frame.treated_patch = side.at("treated_patch").get<std::string>();
    frame.label = side.at("label").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("bad frame sidecar " + json_path + ": " + e.what());
  }

  CsvTable table = read_csv(csv_path);
  std::size_t n_features = frame.feature_names.size();
  if (table.header.size() != n_features + 2 ||
      table.header[n_features] != "w" || table.header[n_features + 1] != "y") {
    throw SchemaError("frame header does not match sidecar schema: " +
                      csv_path);
  }
  for (std::size_t f = 0; f < n_features; ++f) {
    if (table.header[f] != frame.feature_names[f]) {
      throw SchemaError("frame column " + std::to_string(f) +
                        " does not match sidecar schema: " + csv_path);
    }
  }
  frame.columns.assign(n_features, {});
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() != table.header.size()) {
      throw SchemaError("frame row at line " +
                        std::to_string(table.row_lines[r]) +
                        ": wrong field count");
    }
    for (std::size_t f = 0; f < n_features; ++f) {
      auto v = parse_double(row[f]);
      if (!v) {
        throw SchemaError("frame row at line " +
                          std::to_string(table.row_lines[r]) +
                          ": unparsable value");
      }
      frame.columns[f].push_back(*v);
    }
    const auto& wf = row[n_features];
    if (wf != "0" && wf != "1") {
      throw SchemaError("frame row at line " +
                        std::to_string(table.row_lines[r]) +
                        ": treatment must be 0 or 1");
    }
    frame.w.push_back(wf == "1" ? 1 : 0);
    auto yv = parse_double(row[n_features + 1]);
    if (!yv) {
      throw SchemaError("frame row at line " +
                        std::to_string(table.row_lines[r]) +
                        ": unparsable outcome");
    }
    frame.y.push_back(*yv);
  }
  frame.validate();
  return frame;
}

}  // namespace patchfx
