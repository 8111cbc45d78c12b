#include "patchfx/run_config.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>

#include "json.hpp"
#include "patchfx/errors.hpp"
#include "patchfx/rng.hpp"
#include "patchfx/version.hpp"

namespace patchfx {

namespace {

void reject_unknown_keys(const nlohmann::json& obj,
                         const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw ConfigError("unknown key in " + where + ": " + key);
    }
  }
}

}  // namespace

void RunConfig::validate() const {
  if (top_k_champions < 1) {
    throw ConfigError("top_k_champions must be positive");
  }
  if (!(max_reject_rate >= 0.0 && max_reject_rate <= 1.0)) {
    throw ConfigError("max_reject_rate must lie in [0, 1]");
  }
  if (min_rows_per_arm < 0) {
    throw ConfigError("min_rows_per_arm must be non-negative");
  }
  if (threads < 1) throw ConfigError("threads must be positive");
  tree.validate();
  const auto& names = player_feature_names();
  for (const auto& spec : binning) {
    if (std::find(names.begin(), names.end(), spec.feature) == names.end()) {
      throw ConfigError("binning feature is not a derived player feature: " +
                        spec.feature);
    }
    if (spec.percentiles.empty()) {
      throw ConfigError("binning spec needs at least one percentile: " +
                        spec.feature);
    }
  }
}

RunConfig RunConfig::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad run config: ") + e.what());
  }

  RunConfig cfg;
  try {
    reject_unknown_keys(j,
                        {"inputs", "filters", "top_k_champions",
                         "min_rows_per_arm", "tree", "binning", "analysis",
                         "out", "seed", "threads"},
                        "run config");
    if (j.contains("inputs")) {
      const auto& in = j.at("inputs");
      reject_unknown_keys(in, {"matches", "player_matches", "champions"},
                          "inputs");
      cfg.matches_path = in.value("matches", "");
      cfg.player_matches_path = in.value("player_matches", "");
      cfg.champions_path = in.value("champions", "");
    }
    if (j.contains("filters")) {
      const auto& f = j.at("filters");
      reject_unknown_keys(f, {"competitive_only", "max_reject_rate"},
                          "filters");
      cfg.competitive_only = f.value("competitive_only", true);
      cfg.max_reject_rate = f.value("max_reject_rate", 0.01);
    }
    cfg.top_k_champions = j.value("top_k_champions", 25);
    cfg.min_rows_per_arm = j.value("min_rows_per_arm", std::int64_t{0});
    if (j.contains("tree")) {
      const auto& t = j.at("tree");
      reject_unknown_keys(t,
                          {"min_leaf_fraction", "max_depth", "alpha",
                           "min_arm_count", "validation_fraction",
                           "candidate_thresholds_per_feature",
                           "split_criterion"},
                          "tree");
      cfg.tree.min_leaf_fraction = t.value("min_leaf_fraction", 0.05);
      cfg.tree.max_depth = t.value("max_depth", 10);
      cfg.tree.alpha = t.value("alpha", 0.05);
      cfg.tree.min_arm_count = t.value("min_arm_count", std::int64_t{10});
      cfg.tree.validation_fraction = t.value("validation_fraction", 0.25);
      cfg.tree.candidate_thresholds_per_feature =
          t.value("candidate_thresholds_per_feature", 100);
      cfg.tree.split_criterion = t.value("split_criterion", "variance");
    }
    if (j.contains("binning")) {
      for (const auto& b : j.at("binning")) {
        reject_unknown_keys(b, {"feature", "special_zero_bin", "percentiles"},
                            "binning spec");
        BinningSpec spec;
        spec.feature = b.at("feature").get<std::string>();
        spec.special_zero_bin = b.value("special_zero_bin", false);
        spec.percentiles = b.at("percentiles").get<std::vector<double>>();
        cfg.binning.push_back(std::move(spec));
      }
    }
    if (j.contains("analysis")) {
      const auto& a = j.at("analysis");
      reject_unknown_keys(a,
                          {"ate_series", "win_rates", "correlations",
                           "heatmaps", "importance", "effect_gaps",
                           "effect_gap_sample_weighted"},
                          "analysis");
      cfg.run_ate_series = a.value("ate_series", true);
      cfg.run_win_rates = a.value("win_rates", true);
      cfg.run_correlations = a.value("correlations", true);
      cfg.run_heatmaps = a.value("heatmaps", true);
      cfg.run_importance = a.value("importance", true);
      cfg.run_effect_gaps = a.value("effect_gaps", true);
      cfg.effect_gap_sample_weighted =
          a.value("effect_gap_sample_weighted", false);
    }
    cfg.out_dir = j.value("out", "out");
    cfg.seed = j.value("seed", std::uint64_t{0});
    cfg.threads = j.value("threads", 1);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad run config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

RunConfig RunConfig::from_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open run config: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return from_json(text);
}

std::string RunConfig::to_json() const {
  nlohmann::json j;
  j["inputs"] = {{"matches", matches_path},
                 {"player_matches", player_matches_path},
                 {"champions", champions_path}};
  j["filters"] = {{"competitive_only", competitive_only},
                  {"max_reject_rate", max_reject_rate}};
  j["top_k_champions"] = top_k_champions;
  j["min_rows_per_arm"] = min_rows_per_arm;
  j["tree"] = {
      {"min_leaf_fraction", tree.min_leaf_fraction},
      {"max_depth", tree.max_depth},
      {"alpha", tree.alpha},
      {"min_arm_count", tree.min_arm_count},
      {"validation_fraction", tree.validation_fraction},
      {"candidate_thresholds_per_feature",
       tree.candidate_thresholds_per_feature},
      {"split_criterion", tree.split_criterion},
  };
  j["binning"] = nlohmann::json::array();
  for (const auto& spec : binning) {
    j["binning"].push_back({{"feature", spec.feature},
                            {"special_zero_bin", spec.special_zero_bin},
                            {"percentiles", spec.percentiles}});
  }
  j["analysis"] = {
      {"ate_series", run_ate_series},
      {"win_rates", run_win_rates},
      {"correlations", run_correlations},
      {"heatmaps", run_heatmaps},
      {"importance", run_importance},
      {"effect_gaps", run_effect_gaps},
      {"effect_gap_sample_weighted", effect_gap_sample_weighted},
  };
  j["out"] = out_dir;
  j["seed"] = seed;
  j["threads"] = threads;
  return j.dump(2);
}

std::uint64_t derive_task_seed(std::uint64_t seed, std::uint64_t task_index) {
  return splitmix64(splitmix64(seed ^ 0xa5a5a5a5a5a5a5a5ULL) ^ task_index);
}

std::string RunManifest::to_json() const {
  nlohmann::json j;
  j["tool_version"] = kVersion;
  j["rng_algorithm"] = rng_algorithm_id();
  j["command"] = command;
  j["exit_code"] = exit_code;
  j["seed"] = config.seed;
  j["threads"] = config.threads;
  j["config"] = nlohmann::json::parse(config.to_json());
  j["inputs"] = nlohmann::json::object();
  for (const auto& [path, hash] : input_hashes) j["inputs"][path] = hash;
  j["stages"] = nlohmann::json::array();
  for (const auto& stage : stages) {
    nlohmann::json s;
    s["name"] = stage.name;
    s["wall_ms"] = stage.wall_ms;
    s["counts"] = nlohmann::json::object();
    for (const auto& [key, value] : stage.counts) s["counts"][key] = value;
    j["stages"].push_back(std::move(s));
  }
  j["outputs"] = outputs;
  j["skipped_frames"] = skipped_frames;
  j["warnings"] = warnings;
  if (!error.empty()) j["error"] = error;
  return j.dump(2) + "\n";
}

std::string RunManifest::write() const {
  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  auto path = (std::filesystem::path(config.out_dir) /
               ("manifest_" + command + ".json"))
                  .string();
  std::ofstream out(path, std::ios::binary);
  if (!out) return "";
  out << to_json();
  return out ? path : "";
}

StageTimer::StageTimer(RunManifest& manifest, std::string name)
    : manifest_(manifest), start_(std::chrono::steady_clock::now()) {
  stat_.name = std::move(name);
}

StageTimer::~StageTimer() {
  auto elapsed = std::chrono::steady_clock::now() - start_;
  stat_.wall_ms =
      std::chrono::duration<double, std::milli>(elapsed).count();
  manifest_.stages.push_back(std::move(stat_));
}

void StageTimer::count(const std::string& key, std::int64_t value) {
  stat_.counts.emplace_back(key, value);
}

}  // namespace patchfx
