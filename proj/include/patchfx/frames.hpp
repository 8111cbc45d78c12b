#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patchfx/features.hpp"
#include "patchfx/types.hpp"

namespace patchfx {

enum class FeatureKind { binary, count, continuous, ordinal };
enum class OutcomeKind { binary_win, count_kills, continuous };

const char* to_string(FeatureKind k);
const char* to_string(OutcomeKind k);
FeatureKind parse_feature_kind(const std::string& s);
OutcomeKind parse_outcome_kind(const std::string& s);

// Unit table for one treatment comparison: feature matrix X (column-major),
// binary treatment W (1 = on the later patch), outcome Y.
struct TreatmentFrame {
  std::vector<std::string> feature_names;
  std::vector<FeatureKind> feature_kinds;
  std::vector<std::vector<double>> columns;  // [feature][row]
  std::vector<std::uint8_t> w;
  std::vector<double> y;
  OutcomeKind outcome_kind = OutcomeKind::continuous;
  std::string control_patch;  // w_t
  std::string treated_patch;  // w_{t+1}
  std::string label;          // frame identity for filenames/logs

  std::size_t n_rows() const { return y.size(); }
  std::size_t n_features() const { return feature_names.size(); }
  std::int64_t n_treated() const;
  std::int64_t n_control() const;

  // Structural checks (column lengths, w binary, schema sizes); throws
  // InternalError on violation.
  void validate() const;

  // Canonical CSV serialization (features..., w, y) used both for the
  // on-disk format and the content fingerprint.
  std::string to_csv() const;
  std::string fingerprint() const;  // sha256 of to_csv()
};

// Two rows per match (one per team): champion presence indicators plus
// champion-type counts; y = 1 iff that team won; w = 1 iff the match is on
// treated_patch. Matches without exactly five players a side are skipped
// with a warning.
TreatmentFrame build_team_frame(const std::vector<MatchRecord>& matches,
                                const std::vector<PlayerMatchRecord>& player_matches,
                                const ChampionCatalog& catalog,
                                PatchVersion control_patch,
                                PatchVersion treated_patch,
                                std::vector<std::string>* warnings = nullptr);

// One row per (player, match) where the player picked the focal champion;
// x = derived history features, y = kills in that match.
TreatmentFrame build_player_frame(const std::vector<MatchRecord>& matches,
                                  const std::vector<PlayerMatchRecord>& player_matches,
                                  const FeatureTable& features,
                                  const ChampionCatalog& catalog,
                                  ChampionId champion,
                                  PatchVersion control_patch,
                                  PatchVersion treated_patch);

struct BatchFrame {
  ChampionId champion = 0;
  std::string champion_name;
  PatchVersion control_patch;
  PatchVersion treated_patch;
  TreatmentFrame frame;
};

// Every (champion x consecutive patch pair) combination with a frame whose
// arms both have at least min_rows_per_arm rows; skipped combinations are
// logged with a reason.
std::vector<BatchFrame> batch_frames(
    const std::vector<MatchRecord>& matches,
    const std::vector<PlayerMatchRecord>& player_matches,
    const FeatureTable& features, const ChampionCatalog& catalog,
    const std::vector<ChampionId>& champions, const PatchTimeline& timeline,
    std::int64_t min_rows_per_arm, std::vector<std::string>* skip_log);

// frame_<label>_<wt>_<wt1>.csv plus a .json sidecar holding schema, arm
// sizes, and treatment metadata.
void write_frame(const std::string& csv_path, const TreatmentFrame& frame);
TreatmentFrame load_frame(const std::string& csv_path);

}  // namespace patchfx
