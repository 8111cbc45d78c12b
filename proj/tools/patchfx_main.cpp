// patchfx: estimate patch effects from match telemetry.
//
// Subcommands: ingest, features, fit, analyze, synth, report. One JSON
// config drives every stage; --seed/--threads/--out override single keys.
// Exit codes: 0 ok, 2 usage/schema, 3 data quality, 4 internal invariant.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"
#include "patchfx/analysis.hpp"
#include "patchfx/causal_tree.hpp"
#include "patchfx/csv.hpp"
#include "patchfx/errors.hpp"
#include "patchfx/features.hpp"
#include "patchfx/frames.hpp"
#include "patchfx/hash.hpp"
#include "patchfx/ingestion.hpp"
#include "patchfx/run_config.hpp"
#include "patchfx/synthetic.hpp"
#include "patchfx/version.hpp"

namespace fs = std::filesystem;
using namespace patchfx;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open file: " + path);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write file: " + path.string());
  out << content;
  if (!out) throw SchemaError("write failed: " + path.string());
}

std::string sanitize_label(const std::string& label) {
  std::string out;
  for (char c : label) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) || c == '.' ||
                          c == '-'
                      ? c
                      : '_');
  }
  return out.empty() ? std::string("frame") : out;
}

void require_inputs(const RunConfig& cfg) {
  if (cfg.matches_path.empty() || cfg.player_matches_path.empty() ||
      cfg.champions_path.empty()) {
    throw ConfigError(
        "config must set inputs.matches, inputs.player_matches, and "
        "inputs.champions");
  }
}

void hash_input(RunManifest& manifest, const std::string& path) {
  try {
    manifest.input_hashes.emplace_back(path, sha256_file_hex(path));
  } catch (const std::runtime_error& e) {
    throw SchemaError(e.what());  // unreadable input is a usage error
  }
}

// Load, filter, and drop player rows orphaned by the match filter.
Telemetry load_inputs(const RunConfig& cfg, RunManifest& manifest) {
  require_inputs(cfg);
  hash_input(manifest, cfg.matches_path);
  hash_input(manifest, cfg.player_matches_path);
  hash_input(manifest, cfg.champions_path);

  auto telemetry = load_telemetry(cfg.matches_path, cfg.player_matches_path,
                                  cfg.champions_path);
  if (cfg.competitive_only) {
    telemetry.matches = filter_competitive(telemetry.matches);
    std::unordered_map<std::string, bool> keep;
    for (const auto& m : telemetry.matches) keep[m.match_id] = true;
    std::erase_if(telemetry.player_matches,
                  [&](const PlayerMatchRecord& pm) {
                    return !keep.count(pm.match_id);
                  });
  }
  for (const auto& w : telemetry.warnings) manifest.warnings.push_back(w);
  return telemetry;
}

int cmd_ingest(const RunConfig& cfg, RunManifest& manifest) {
  StageTimer timer(manifest, "ingest");
  auto telemetry = load_inputs(cfg, manifest);
  timer.count("rows_seen", telemetry.rows_seen);
  timer.count("matches", static_cast<std::int64_t>(telemetry.matches.size()));
  timer.count("player_matches",
              static_cast<std::int64_t>(telemetry.player_matches.size()));
  timer.count("rejects", static_cast<std::int64_t>(telemetry.rejects.size()));

  fs::path out(cfg.out_dir);
  fs::create_directories(out);
  write_rejects_csv((out / "rejects.csv").string(), telemetry.rejects);
  manifest.outputs.push_back((out / "rejects.csv").string());

  double rate = telemetry.reject_rate();
  if (rate > cfg.max_reject_rate) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "reject rate %.4f exceeds threshold %.4f", rate,
                  cfg.max_reject_rate);
    throw DataQualityError(buf);
  }

  write_matches_csv((out / "matches.csv").string(), telemetry.matches);
  write_player_matches_csv((out / "player_matches.csv").string(),
                           telemetry.player_matches);
  manifest.outputs.push_back((out / "matches.csv").string());
  manifest.outputs.push_back((out / "player_matches.csv").string());
  return 0;
}

int cmd_features(const RunConfig& cfg, RunManifest& manifest) {
  StageTimer timer(manifest, "features");
  auto telemetry = load_inputs(cfg, manifest);
  auto features = compute_features(telemetry.matches,
                                   telemetry.player_matches);
  for (const auto& w : features.warnings) manifest.warnings.push_back(w);
  timer.count("player_matches",
              static_cast<std::int64_t>(telemetry.player_matches.size()));
  timer.count("feature_rows", static_cast<std::int64_t>(features.rows.size()));

  fs::path out(cfg.out_dir);
  fs::create_directories(out);
  write_features_csv((out / "features.csv").string(), features);
  manifest.outputs.push_back((out / "features.csv").string());
  return 0;
}

struct FitTask {
  TreatmentFrame frame;
  std::string label;  // filename stem: tree_<label>_<control>_<treated>
};

// Fit every task and write tree_<...>.json/.dot; FrameError means the task
// is skipped and logged, anything else aborts the run.
void run_fit_tasks(const RunConfig& cfg, RunManifest& manifest,
                   StageTimer& timer, std::vector<FitTask>&& tasks) {
  fs::path tree_dir = fs::path(cfg.out_dir) / "trees";
  fs::create_directories(tree_dir);

  struct Slot {
    std::string json;
    std::string dot;
    std::string skip_reason;
    std::exception_ptr failure;
  };
  std::vector<Slot> slots(tasks.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        TreeConfig tree_cfg = cfg.tree;
        tree_cfg.seed = derive_task_seed(cfg.seed, i);
        auto tree = CausalTree::fit(tasks[i].frame, tree_cfg);
        slots[i].json = tree.to_json();
        slots[i].dot = tree.to_dot();
      } catch (const FrameError& e) {
        slots[i].skip_reason = e.what();
      } catch (...) {
        slots[i].failure = std::current_exception();
      }
    }
  };

  int n_threads = std::min<int>(cfg.threads,
                                std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::int64_t written = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (slots[i].failure) std::rethrow_exception(slots[i].failure);
    if (!slots[i].skip_reason.empty()) {
      manifest.skipped_frames.push_back(tasks[i].label + ": " +
                                        slots[i].skip_reason);
      continue;
    }
    auto stem = "tree_" + sanitize_label(tasks[i].label);
    write_file(tree_dir / (stem + ".json"), slots[i].json);
    write_file(tree_dir / (stem + ".dot"), slots[i].dot);
    manifest.outputs.push_back((tree_dir / (stem + ".json")).string());
    manifest.outputs.push_back((tree_dir / (stem + ".dot")).string());
    ++written;
  }
  timer.count("trees_written", written);
}

std::pair<PatchVersion, PatchVersion> parse_pair(const std::string& wt,
                                                 const std::string& wt1) {
  auto a = parse_patch(wt);
  auto b = parse_patch(wt1);
  if (!a || !b) {
    throw ConfigError("scope patches must be X.Y versions: " + wt + ", " +
                      wt1);
  }
  return {*a, *b};
}

std::vector<std::string> split_scope(const std::string& scope) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    auto colon = scope.find(':', pos);
    if (colon == std::string::npos) {
      parts.push_back(scope.substr(pos));
      return parts;
    }
    parts.push_back(scope.substr(pos, colon - pos));
    pos = colon + 1;
  }
}

ChampionId resolve_champion(const ChampionCatalog& catalog,
                            const std::string& token) {
  if (!token.empty() &&
      std::all_of(token.begin(), token.end(),
                  [](unsigned char c) { return std::isdigit(c); })) {
    auto id = parse_int(token);
    if (id && catalog.contains(*id)) return *id;
    throw ConfigError("champion id not in catalog: " + token);
  }
  for (const auto& [id, info] : catalog.champions) {
    if (info.name == token) return id;
  }
  throw ConfigError("unknown champion in scope: " + token);
}

int cmd_fit(const RunConfig& cfg, RunManifest& manifest,
            const std::string& scope) {
  StageTimer timer(manifest, "fit");
  auto parts = split_scope(scope);
  std::vector<FitTask> tasks;

  if (parts[0] == "frame") {
    if (parts.size() != 2) {
      throw ConfigError("frame scope is frame:<path>");
    }
    hash_input(manifest, parts[1]);
    FitTask task;
    task.frame = load_frame(parts[1]);
    task.label = task.frame.label + "_" + task.frame.control_patch + "_" +
                 task.frame.treated_patch;
    tasks.push_back(std::move(task));
  } else if (parts[0] == "team") {
    if (parts.size() != 3) {
      throw ConfigError("team scope is team:<control>:<treated>");
    }
    auto telemetry = load_inputs(cfg, manifest);
    auto [wt, wt1] = parse_pair(parts[1], parts[2]);
    FitTask task;
    task.frame = build_team_frame(telemetry.matches,
                                  telemetry.player_matches,
                                  telemetry.catalog, wt, wt1,
                                  &manifest.warnings);
    task.label = "team_" + wt.str() + "_" + wt1.str();
    tasks.push_back(std::move(task));
  } else if (parts[0] == "player") {
    if (parts.size() != 4) {
      throw ConfigError("player scope is player:<champion>:<control>:<treated>");
    }
    auto telemetry = load_inputs(cfg, manifest);
    auto champion = resolve_champion(telemetry.catalog, parts[1]);
    auto [wt, wt1] = parse_pair(parts[2], parts[3]);
    auto features = compute_features(telemetry.matches,
                                     telemetry.player_matches);
    FitTask task;
    task.frame = build_player_frame(telemetry.matches,
                                    telemetry.player_matches, features,
                                    telemetry.catalog, champion, wt, wt1);
    task.label = telemetry.catalog.at(champion).name + "_" + wt.str() + "_" +
                 wt1.str();
    tasks.push_back(std::move(task));
  } else if (parts[0] == "batch") {
    if (parts.size() != 1) throw ConfigError("batch scope takes no arguments");
    auto telemetry = load_inputs(cfg, manifest);
    auto features = compute_features(telemetry.matches,
                                     telemetry.player_matches);
    auto timeline =
        build_patch_timeline(telemetry.matches, &manifest.warnings);
    auto champions =
        top_champions(telemetry.player_matches, telemetry.catalog,
                      static_cast<std::size_t>(cfg.top_k_champions),
                      &manifest.warnings);
    auto frames = batch_frames(telemetry.matches, telemetry.player_matches,
                               features, telemetry.catalog, champions,
                               timeline, cfg.effective_min_rows_per_arm(),
                               &manifest.skipped_frames);
    timer.count("champions", static_cast<std::int64_t>(champions.size()));
    timer.count("patch_pairs",
                static_cast<std::int64_t>(timeline.consecutive_pairs().size()));
    for (auto& bf : frames) {
      FitTask task;
      task.label = bf.champion_name + "_" + bf.control_patch.str() + "_" +
                   bf.treated_patch.str();
      task.frame = std::move(bf.frame);
      tasks.push_back(std::move(task));
    }
  } else {
    throw ConfigError("unknown fit scope: " + scope);
  }

  timer.count("frames", static_cast<std::int64_t>(tasks.size()));
  run_fit_tasks(cfg, manifest, timer, std::move(tasks));
  return 0;
}

// Sorted tree documents from <out>/trees; empty if the directory is absent.
std::vector<CausalTree> load_trees(const RunConfig& cfg,
                                   RunManifest& manifest) {
  fs::path tree_dir = fs::path(cfg.out_dir) / "trees";
  std::vector<std::string> paths;
  if (fs::is_directory(tree_dir)) {
    for (const auto& entry : fs::directory_iterator(tree_dir)) {
      if (entry.path().extension() == ".json") {
        paths.push_back(entry.path().string());
      }
    }
  }
  std::sort(paths.begin(), paths.end());
  std::vector<CausalTree> trees;
  trees.reserve(paths.size());
  for (const auto& path : paths) {
    trees.push_back(CausalTree::from_json(read_file(path)));
  }
  if (trees.empty()) {
    manifest.warnings.push_back("no trees under " + tree_dir.string() +
                                "; importance and gap reports are empty");
  }
  return trees;
}

int cmd_analyze(const RunConfig& cfg, RunManifest& manifest) {
  StageTimer timer(manifest, "analyze");
  auto telemetry = load_inputs(cfg, manifest);
  auto timeline = build_patch_timeline(telemetry.matches, &manifest.warnings);
  fs::path out(cfg.out_dir);
  fs::create_directories(out);

  if (cfg.run_ate_series) {
    auto series = ate_series(telemetry.matches, telemetry.player_matches,
                             timeline);
    write_ate_series_csv((out / "ate_series.csv").string(), series);
    manifest.outputs.push_back((out / "ate_series.csv").string());
    timer.count("ate_cells", static_cast<std::int64_t>(series.cells.size()));
  }

  std::vector<ChampionId> champions;
  if (cfg.run_win_rates || cfg.run_correlations) {
    champions = top_champions(telemetry.player_matches, telemetry.catalog,
                              static_cast<std::size_t>(cfg.top_k_champions),
                              &manifest.warnings);
  }
  std::vector<WinRateSeries> rates;
  if (cfg.run_win_rates) {
    for (auto id : champions) {
      rates.push_back(win_rate_series(telemetry.matches,
                                      telemetry.player_matches,
                                      telemetry.catalog, id));
    }
    write_win_rates_csv((out / "win_rates.csv").string(), rates);
    manifest.outputs.push_back((out / "win_rates.csv").string());
  }

  if (cfg.run_correlations && rates.size() >= 2) {
    CsvTable table;
    table.header = {"champion_a", "champion_b", "r", "p_value", "n_common"};
    for (std::size_t i = 0; i < rates.size(); ++i) {
      for (std::size_t j = i + 1; j < rates.size(); ++j) {
        try {
          auto result = correlate(rates[i], rates[j]);
          table.rows.push_back({rates[i].champion_name,
                                rates[j].champion_name,
                                format_double(result.r),
                                format_double(result.p_value),
                                std::to_string(result.n)});
        } catch (const FrameError&) {
          // Too few common patches or a flat series: pair omitted.
        }
      }
    }
    write_csv((out / "win_rate_correlations.csv").string(), table);
    manifest.outputs.push_back((out / "win_rate_correlations.csv").string());
  }

  if (cfg.run_heatmaps && !cfg.binning.empty()) {
    auto features = compute_features(telemetry.matches,
                                     telemetry.player_matches);
    // Per feature-table row: the outcome (kills) and patch of its match.
    std::unordered_map<std::string, const PlayerMatchRecord*> pm_of;
    std::unordered_map<std::string, const MatchRecord*> match_of;
    for (const auto& pm : telemetry.player_matches) {
      pm_of[pm.user_id + "\x1f" + pm.match_id] = &pm;
    }
    for (const auto& m : telemetry.matches) match_of[m.match_id] = &m;

    std::vector<double> outcomes;
    std::vector<PatchVersion> patches;
    outcomes.reserve(features.rows.size());
    patches.reserve(features.rows.size());
    for (const auto& row : features.rows) {
      const auto* pm = pm_of.at(row.user_id + "\x1f" + row.match_id);
      outcomes.push_back(static_cast<double>(pm->kills));
      patches.push_back(match_of.at(row.match_id)->patch);
    }

    const auto& names = player_feature_names();
    for (const auto& spec : cfg.binning) {
      auto feature_idx = static_cast<std::size_t>(
          std::find(names.begin(), names.end(), spec.feature) -
          names.begin());
      std::vector<double> values;
      values.reserve(features.rows.size());
      for (const auto& row : features.rows) {
        values.push_back(row.values[feature_idx]);
      }
      for (auto mode : {HeatmapMode::mean_outcome, HeatmapMode::ate}) {
        auto table = heatmap_table(values, outcomes, patches, spec, timeline,
                                   mode);
        for (const auto& w : table.warnings) manifest.warnings.push_back(w);
        auto name = std::string(mode == HeatmapMode::ate ? "heatmap_ate_"
                                                         : "heatmap_mean_") +
                    spec.feature + ".csv";
        write_heatmap_csv((out / name).string(), table);
        manifest.outputs.push_back((out / name).string());
      }
    }
  }

  if (cfg.run_importance || cfg.run_effect_gaps) {
    auto trees = load_trees(cfg, manifest);
    std::vector<const CausalTree*> views;
    views.reserve(trees.size());
    for (const auto& t : trees) views.push_back(&t);
    timer.count("trees", static_cast<std::int64_t>(trees.size()));

    if (cfg.run_importance) {
      auto report = feature_importance(views);
      for (const auto& w : report.warnings) manifest.warnings.push_back(w);
      write_feature_importance_csv((out / "feature_importance.csv").string(),
                                   report);
      manifest.outputs.push_back((out / "feature_importance.csv").string());
    }
    if (cfg.run_effect_gaps) {
      auto gaps = effect_gaps(views, cfg.effect_gap_sample_weighted);
      write_effect_gaps_csv((out / "effect_gaps.csv").string(), gaps);
      manifest.outputs.push_back((out / "effect_gaps.csv").string());
    }
  }
  return 0;
}

int cmd_synth(const RunConfig& cfg, RunManifest& manifest,
              const std::string& spec_path) {
  StageTimer timer(manifest, "synth");
  hash_input(manifest, spec_path);
  auto spec = SyntheticSpec::from_json(read_file(spec_path));
  if (spec.seed == 0) spec.seed = cfg.seed;
  auto result = generate(spec);
  timer.count("units", spec.n_units);

  fs::path out(cfg.out_dir);
  fs::create_directories(out);
  auto frame_path = (out / "synthetic_frame.csv").string();
  write_frame(frame_path, result.frame);
  // The spec document is the oracle: boxes carry the planted truth.
  write_file(out / "synthetic_oracle.json", result.oracle.spec().to_json());
  manifest.outputs.push_back(frame_path);
  manifest.outputs.push_back((out / "synthetic_frame.json").string());
  manifest.outputs.push_back((out / "synthetic_oracle.json").string());
  return 0;
}

void append_csv_section(std::string& md, const fs::path& path,
                        const std::string& title, std::size_t max_rows) {
  if (!fs::exists(path)) return;
  auto table = read_csv(path.string());
  md += "\n## " + title + "\n\n";
  if (table.rows.empty()) {
    md += "_empty_\n";
    return;
  }
  auto cell = [](const std::string& s) { return s.empty() ? " " : s; };
  md += "|";
  for (const auto& h : table.header) md += " " + cell(h) + " |";
  md += "\n|";
  for (std::size_t i = 0; i < table.header.size(); ++i) md += " --- |";
  md += "\n";
  for (std::size_t r = 0; r < std::min(max_rows, table.rows.size()); ++r) {
    md += "|";
    for (const auto& v : table.rows[r]) md += " " + cell(v) + " |";
    md += "\n";
  }
  if (table.rows.size() > max_rows) {
    md += "\n_" + std::to_string(table.rows.size() - max_rows) +
          " more rows in " + path.filename().string() + "_\n";
  }
}

int cmd_report(const RunConfig& cfg, RunManifest& manifest,
               double alpha_display) {
  if (!(alpha_display > 0.0 && alpha_display <= 1.0)) {
    throw ConfigError("--alpha-display must lie in (0, 1]");
  }
  StageTimer timer(manifest, "report");
  fs::path out(cfg.out_dir);
  fs::create_directories(out);

  std::string md = "# Patch effect report\n\n";
  md += "Generated by patchfx " + std::string(kVersion) + ", seed " +
        std::to_string(cfg.seed) + ".\n";

  append_csv_section(md, out / "ate_series.csv",
                     "Average effects per patch transition", 30);
  append_csv_section(md, out / "win_rates.csv", "Champion win rates", 30);
  append_csv_section(md, out / "win_rate_correlations.csv",
                     "Win-rate correlations", 15);
  append_csv_section(md, out / "feature_importance.csv",
                     "Feature importance (split-weight)", 15);
  append_csv_section(md, out / "effect_gaps.csv", "Effect gaps", 15);

  // Display trees: structure trimmed at alpha_display, matching highlights.
  fs::path tree_dir = out / "trees";
  std::vector<std::string> tree_paths;
  if (fs::is_directory(tree_dir)) {
    for (const auto& entry : fs::directory_iterator(tree_dir)) {
      auto name = entry.path().filename().string();
      if (entry.path().extension() == ".json" &&
          name.rfind("tree_", 0) == 0) {
        tree_paths.push_back(entry.path().string());
      }
    }
  }
  std::sort(tree_paths.begin(), tree_paths.end());
  timer.count("trees", static_cast<std::int64_t>(tree_paths.size()));
  if (!tree_paths.empty()) {
    md += "\n## Trees\n\n";
  }
  for (const auto& path : tree_paths) {
    auto tree = CausalTree::from_json(read_file(path));
    auto display = tree.trimmed(alpha_display);
    fs::path src(path);
    auto stem = src.stem().string() + "_trimmed.dot";
    write_file(tree_dir / stem, display.to_dot(alpha_display));
    manifest.outputs.push_back((tree_dir / stem).string());
    char line[256];
    std::snprintf(line, sizeof(line),
                  "- `%s`: root tau %.4g (p %.3g), %lld nodes shown\n",
                  src.filename().string().c_str(),
                  display.root().effect.tau, display.root().effect.p_value,
                  static_cast<long long>(2 * display.internal_node_count() +
                                         1));
    md += line;
  }

  write_file(out / "report.md", md);
  manifest.outputs.push_back((out / "report.md").string());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"patch effect estimation from match telemetry"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string config_path;
  std::uint64_t seed_flag = 0;
  int threads_flag = 0;
  std::string out_flag;
  std::string scope = "batch";
  std::string spec_path;
  double alpha_display = 0.05;

  auto* opt_config =
      app.add_option("--config", config_path, "run config JSON document");
  auto* opt_seed = app.add_option("--seed", seed_flag, "global seed");
  auto* opt_threads =
      app.add_option("--threads", threads_flag, "worker threads for batch fit");
  auto* opt_out = app.add_option("--out", out_flag, "output directory");

  auto* sub_ingest =
      app.add_subcommand("ingest", "validate telemetry, write clean tables");
  auto* sub_features =
      app.add_subcommand("features", "derive per-player history features");
  auto* sub_fit = app.add_subcommand("fit", "fit causal trees");
  sub_fit->add_option(
      "--scope", scope,
      "batch | team:<wt>:<wt1> | player:<champion>:<wt>:<wt1> | frame:<csv>");
  auto* sub_analyze =
      app.add_subcommand("analyze", "ATE series, win rates, heatmaps, "
                                    "importance, effect gaps");
  auto* sub_synth =
      app.add_subcommand("synth", "generate a frame with known effects");
  sub_synth->add_option("--spec", spec_path, "synthetic spec JSON")
      ->required();
  auto* sub_report =
      app.add_subcommand("report", "render report.md and trimmed tree DOTs");
  sub_report->add_option("--alpha-display", alpha_display,
                         "significance level for display trimming");
  for (auto* sub :
       {sub_ingest, sub_features, sub_fit, sub_analyze, sub_synth, sub_report}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  RunManifest manifest;
  manifest.command = app.get_subcommands().front()->get_name();
  // Manifest lands in the flagged out dir even if the config fails to load.
  if (*opt_out) manifest.config.out_dir = out_flag;

  int code = 0;
  try {
    RunConfig cfg;
    if (*opt_config) cfg = RunConfig::from_json_file(config_path);
    if (*opt_seed) cfg.seed = seed_flag;
    if (*opt_threads) cfg.threads = threads_flag;
    if (*opt_out) cfg.out_dir = out_flag;
    cfg.validate();
    manifest.config = cfg;

    if (*sub_ingest) {
      code = cmd_ingest(cfg, manifest);
    } else if (*sub_features) {
      code = cmd_features(cfg, manifest);
    } else if (*sub_fit) {
      code = cmd_fit(cfg, manifest, scope);
    } else if (*sub_analyze) {
      code = cmd_analyze(cfg, manifest);
    } else if (*sub_synth) {
      code = cmd_synth(cfg, manifest, spec_path);
    } else if (*sub_report) {
      code = cmd_report(cfg, manifest, alpha_display);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    manifest.error = e.what();
    code = 2;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    manifest.error = e.what();
    code = 2;
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    manifest.error = e.what();
    code = 2;
  } catch (const DataQualityError& e) {
    std::cerr << "data quality error: " << e.what() << "\n";
    manifest.error = e.what();
    code = 3;
  } catch (const FrameError& e) {
    std::cerr << "frame error: " << e.what() << "\n";
    manifest.error = e.what();
    code = 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    manifest.error = e.what();
    code = 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    manifest.error = e.what();
    code = 4;
  }

  manifest.exit_code = code;
  if (manifest.write().empty()) {
    std::cerr << "warning: could not write run manifest under "
              << manifest.config.out_dir << "\n";
  }
  return code;
}
