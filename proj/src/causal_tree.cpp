#include "patchfx/causal_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "json.hpp"
#include "patchfx/csv.hpp"
#include "patchfx/errors.hpp"
#include "patchfx/rng.hpp"

namespace patchfx {

void TreeConfig::validate() const {
  if (!(min_leaf_fraction > 0.0 && min_leaf_fraction < 0.5)) {
    throw ConfigError("min_leaf_fraction must lie in (0, 0.5)");
  }
  if (!(validation_fraction > 0.0 && validation_fraction < 0.5)) {
    throw ConfigError("validation_fraction must lie in (0, 0.5)");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("alpha must lie in (0, 1)");
  }
  if (max_depth < 0) throw ConfigError("max_depth must be non-negative");
  if (min_arm_count < 2) {
    throw ConfigError("min_arm_count must be at least 2");
  }
  if (candidate_thresholds_per_feature < 1) {
    throw ConfigError("candidate_thresholds_per_feature must be positive");
  }
  if (split_criterion != "variance" && split_criterion != "heterogeneity") {
    throw ConfigError("split_criterion must be 'variance' or 'heterogeneity'");
  }
}

namespace {

// Accumulated per-arm sums of centered outcomes for one side of a split.
struct ArmSums {
  std::int64_t n = 0;
  double sum = 0.0;
  double sum2 = 0.0;

  void add(double z) {
    ++n;
    sum += z;
    sum2 += z * z;
  }

  double mean() const { return sum / static_cast<double>(n); }
  double variance() const {  // unbiased; requires n >= 2
    double v = (sum2 - sum * sum / static_cast<double>(n)) /
               static_cast<double>(n - 1);
    return std::max(v, 0.0);
  }
};

struct SideSums {
  ArmSums treated;
  ArmSums control;

  std::int64_t n() const { return treated.n + control.n; }
  bool computable() const { return treated.n >= 2 && control.n >= 2; }
  double tau() const { return treated.mean() - control.mean(); }
  double se2() const {
    return treated.variance() / static_cast<double>(treated.n) +
           control.variance() / static_cast<double>(control.n);
  }
};

struct FitContext {
  const TreatmentFrame& frame;
  const TreeConfig& cfg;
  std::vector<std::uint8_t> is_val;  // per frame row
  double min_leaf_rows = 0.0;
  std::vector<std::size_t> feature_order;  // name-ascending
  bool variance_criterion = true;
};

EffectEstimate node_effect(const FitContext& ctx,
                           const std::vector<std::int32_t>& rows) {
  SummaryStats treated, control;
  for (auto r : rows) {
    (ctx.frame.w[r] ? treated : control).add(ctx.frame.y[r]);
  }
  return estimate_effect(treated, control);
}

// Welch z-style test on the difference of two child effects; p = 1 when
// both children are exactly constant.
double child_difference_p(const SideSums& left, const SideSums& right) {
  double denom = left.se2() + right.se2();
  if (denom <= 0.0) return 1.0;
  return two_sided_normal_pvalue((left.tau() - right.tau()) /
                                 std::sqrt(denom));
}

struct Candidate {
  double score = std::numeric_limits<double>::infinity();
  std::size_t feature = 0;
  double threshold = 0.0;
  bool found = false;
};

// Candidate thresholds for one feature: midpoints between adjacent distinct
// training values, sampled at up to cfg.candidate_thresholds_per_feature
// quantiles of the training value mass.
std::vector<double> candidate_thresholds(std::vector<double> train_vals,
                                         int max_candidates) {
  std::sort(train_vals.begin(), train_vals.end());
  std::vector<double> distinct = train_vals;
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  if (distinct.size() < 2) return {};

  std::vector<double> mids;
  auto boundary_above = [&](double v) -> double {
    auto it = std::upper_bound(distinct.begin(), distinct.end(), v);
    if (it == distinct.end()) return std::numeric_limits<double>::quiet_NaN();
    return (*(it - 1) + *it) / 2.0;
  };

  auto m = static_cast<std::int64_t>(distinct.size() - 1);
  if (m <= max_candidates) {
    mids.reserve(distinct.size() - 1);
    for (std::size_t i = 0; i + 1 < distinct.size(); ++i) {
      mids.push_back((distinct[i] + distinct[i + 1]) / 2.0);
    }
    return mids;
  }

  auto n = static_cast<std::int64_t>(train_vals.size());
  for (int j = 1; j <= max_candidates; ++j) {
    auto pos = static_cast<std::size_t>(
        static_cast<double>(j) * static_cast<double>(n - 1) /
        static_cast<double>(max_candidates + 1));
    double b = boundary_above(train_vals[pos]);
    if (!std::isnan(b)) mids.push_back(b);
  }
  std::sort(mids.begin(), mids.end());
  mids.erase(std::unique(mids.begin(), mids.end()), mids.end());
  return mids;
}

struct SplitDecision {
  bool split = false;
  std::size_t feature = 0;
  double threshold = 0.0;
};

SplitDecision choose_split(const FitContext& ctx,
                           const std::vector<std::int32_t>& rows,
                           double center) {
  // Totals over training rows, and pooled per-arm counts.
  SideSums total_train;
  std::int64_t pooled_t = 0, pooled_c = 0;
  for (auto r : rows) {
    bool treated = ctx.frame.w[r] != 0;
    (treated ? pooled_t : pooled_c) += 1;
    if (!ctx.is_val[r]) {
      (treated ? total_train.treated : total_train.control)
          .add(ctx.frame.y[r] - center);
    }
  }
  if (!total_train.computable()) return {};
  auto n_train = total_train.n();

  Candidate best;
  std::vector<std::int32_t> order;
  std::vector<double> train_vals;
  for (std::size_t f : ctx.feature_order) {
    const auto& col = ctx.frame.columns[f];

    train_vals.clear();
    for (auto r : rows) {
      if (!ctx.is_val[r]) train_vals.push_back(col[r]);
    }
    auto thresholds = candidate_thresholds(
        train_vals, ctx.cfg.candidate_thresholds_per_feature);
    if (thresholds.empty()) continue;

    order.assign(rows.begin(), rows.end());
    std::sort(order.begin(), order.end(),
              [&](std::int32_t a, std::int32_t b) { return col[a] < col[b]; });

    // Sweep thresholds ascending, accumulating the "< threshold" side.
    SideSums right_train;
    std::int64_t right_pt = 0, right_pc = 0;
    std::size_t next = 0;
    for (double t : thresholds) {
      while (next < order.size() && col[order[next]] < t) {
        auto r = order[next++];
        bool treated = ctx.frame.w[r] != 0;
        (treated ? right_pt : right_pc) += 1;
        if (!ctx.is_val[r]) {
          (treated ? right_train.treated : right_train.control)
              .add(ctx.frame.y[r] - center);
        }
      }
      // Pooled admissibility: leaf size and per-arm floors on both sides.
      std::int64_t left_pt = pooled_t - right_pt;
      std::int64_t left_pc = pooled_c - right_pc;
      double left_pool = static_cast<double>(left_pt + left_pc);
      double right_pool = static_cast<double>(right_pt + right_pc);
      if (left_pool < ctx.min_leaf_rows || right_pool < ctx.min_leaf_rows) {
        continue;
      }
      if (left_pt < ctx.cfg.min_arm_count || left_pc < ctx.cfg.min_arm_count ||
          right_pt < ctx.cfg.min_arm_count ||
          right_pc < ctx.cfg.min_arm_count) {
        continue;
      }

      SideSums left_train;
      left_train.treated.n = total_train.treated.n - right_train.treated.n;
      left_train.treated.sum = total_train.treated.sum - right_train.treated.sum;
      left_train.treated.sum2 =
          total_train.treated.sum2 - right_train.treated.sum2;
      left_train.control.n = total_train.control.n - right_train.control.n;
      left_train.control.sum = total_train.control.sum - right_train.control.sum;
      left_train.control.sum2 =
          total_train.control.sum2 - right_train.control.sum2;
      if (!left_train.computable() || !right_train.computable()) continue;

      double score;
      if (ctx.variance_criterion) {
        score = (static_cast<double>(left_train.n()) * left_train.se2() +
                 static_cast<double>(right_train.n()) * right_train.se2()) /
                static_cast<double>(n_train);
      } else {
        double tl = left_train.tau(), tr = right_train.tau();
        score = -(static_cast<double>(left_train.n()) * tl * tl +
                  static_cast<double>(right_train.n()) * tr * tr) /
                static_cast<double>(n_train);
      }
      // Strict improvement only: earlier candidates (smaller feature name,
      // smaller threshold) win ties.
      if (score < best.score) {
        best.score = score;
        best.feature = f;
        best.threshold = t;
        best.found = true;
      }
    }
  }
  if (!best.found) return {};

  // Significance gate, stage one: training partition.
  const auto& col = ctx.frame.columns[best.feature];
  SideSums train_left, train_right, val_left, val_right;
  for (auto r : rows) {
    double z = ctx.frame.y[r] - center;
    bool left = col[r] >= best.threshold;
    bool treated = ctx.frame.w[r] != 0;
    SideSums& side = ctx.is_val[r] ? (left ? val_left : val_right)
                                   : (left ? train_left : train_right);
    (treated ? side.treated : side.control).add(z);
  }
  double p_train = child_difference_p(train_left, train_right);
  if (!(p_train < ctx.cfg.alpha)) return {};

  // Stage two: the difference must replicate on held-out rows.
  if (!val_left.computable() || !val_right.computable()) return {};
  double d_train = train_left.tau() - train_right.tau();
  double d_val = val_left.tau() - val_right.tau();
  bool same_sign = (d_train > 0.0 && d_val > 0.0) ||
                   (d_train < 0.0 && d_val < 0.0);
  if (!same_sign) return {};
  double p_val = child_difference_p(val_left, val_right);
  if (!(p_val < ctx.cfg.alpha)) return {};

  return {true, best.feature, best.threshold};
}

std::unique_ptr<TreeNode> grow(const FitContext& ctx,
                               const std::vector<std::int32_t>& rows,
                               int depth) {
  auto node = std::make_unique<TreeNode>();
  node->depth = depth;
  node->effect = node_effect(ctx, rows);
  node->samples = node->effect.n_treated + node->effect.n_control;

  if (depth >= ctx.cfg.max_depth) return node;

  // Center outcomes at the node mean so split-score arithmetic is stable
  // under large outcome offsets.
  double center = 0.0;
  for (auto r : rows) center += ctx.frame.y[r];
  center /= static_cast<double>(rows.size());

  auto decision = choose_split(ctx, rows, center);
  if (!decision.split) return node;

  const auto& col = ctx.frame.columns[decision.feature];
  std::vector<std::int32_t> left_rows, right_rows;
  for (auto r : rows) {
    (col[r] >= decision.threshold ? left_rows : right_rows).push_back(r);
  }
  node->split_feature = ctx.frame.feature_names[decision.feature];
  node->split_threshold = decision.threshold;
  node->left = grow(ctx, left_rows, depth + 1);
  node->right = grow(ctx, right_rows, depth + 1);
  return node;
}

std::unique_ptr<TreeNode> copy_node(const TreeNode& node) {
  auto out = std::make_unique<TreeNode>();
  out->effect = node.effect;
  out->depth = node.depth;
  out->samples = node.samples;
  out->split_feature = node.split_feature;
  out->split_threshold = node.split_threshold;
  out->significant = node.significant;
  if (!node.is_leaf()) {
    out->left = copy_node(*node.left);
    out->right = copy_node(*node.right);
  }
  return out;
}

bool subtree_has_significant(const TreeNode& node, double alpha) {
  if (node.effect.p_value < alpha) return true;
  if (node.is_leaf()) return false;
  return subtree_has_significant(*node.left, alpha) ||
         subtree_has_significant(*node.right, alpha);
}

std::unique_ptr<TreeNode> trim_node(const TreeNode& node, double alpha) {
  auto out = std::make_unique<TreeNode>();
  out->effect = node.effect;
  out->depth = node.depth;
  out->samples = node.samples;
  out->significant = node.effect.p_value < alpha;
  if (node.is_leaf()) return out;
  if (!subtree_has_significant(*node.left, alpha) &&
      !subtree_has_significant(*node.right, alpha)) {
    return out;  // nothing below is worth showing
  }
  out->split_feature = node.split_feature;
  out->split_threshold = node.split_threshold;
  out->left = trim_node(*node.left, alpha);
  out->right = trim_node(*node.right, alpha);
  return out;
}

nlohmann::json node_to_json(const TreeNode& node) {
  nlohmann::json j;
  j["tau"] = node.effect.tau;
  j["se"] = node.effect.se;
  j["p"] = node.effect.p_value;
  j["n_treated"] = node.effect.n_treated;
  j["n_control"] = node.effect.n_control;
  if (node.is_leaf()) {
    j["split"] = nullptr;
    j["left"] = nullptr;
    j["right"] = nullptr;
  } else {
    j["split"] = {{"feature", node.split_feature},
                  {"threshold", node.split_threshold}};
    j["left"] = node_to_json(*node.left);
    j["right"] = node_to_json(*node.right);
  }
  return j;
}

std::unique_ptr<TreeNode> node_from_json(const nlohmann::json& j, int depth) {
  auto node = std::make_unique<TreeNode>();
  node->depth = depth;
  node->effect.tau = j.at("tau").get<double>();
  node->effect.se = j.at("se").get<double>();
  node->effect.p_value = j.at("p").get<double>();
  node->effect.n_treated = j.at("n_treated").get<std::int64_t>();
  node->effect.n_control = j.at("n_control").get<std::int64_t>();
  // Arm means are not part of the serialized form.
  node->effect.mean_treated = std::numeric_limits<double>::quiet_NaN();
  node->effect.mean_control = std::numeric_limits<double>::quiet_NaN();
  node->samples = node->effect.n_treated + node->effect.n_control;
  if (!j.at("split").is_null()) {
    node->split_feature = j.at("split").at("feature").get<std::string>();
    node->split_threshold = j.at("split").at("threshold").get<double>();
    node->left = node_from_json(j.at("left"), depth + 1);
    node->right = node_from_json(j.at("right"), depth + 1);
  }
  return node;
}

void dot_escape_into(std::string& out, const std::string& s) {
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
}

void node_to_dot(const TreeNode& node, double alpha, int& counter,
                 std::string& out) {
  int id = counter++;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "  n%d [label=\"tau=%.4g\\nse=%.4g p=%.4g\\nsamples=%lld\"%s];\n",
                id, node.effect.tau, node.effect.se, node.effect.p_value,
                static_cast<long long>(node.samples),
                node.effect.p_value < alpha
                    ? ", style=filled, fillcolor=lightgoldenrod"
                    : "");
  out += buf;
  if (node.is_leaf()) return;

  int left_id = counter;
  node_to_dot(*node.left, alpha, counter, out);
  int right_id = counter;
  node_to_dot(*node.right, alpha, counter, out);

  std::string feature;
  dot_escape_into(feature, node.split_feature);
  std::snprintf(buf, sizeof(buf), "  n%d -> n%d [label=\"%s >= %.6g\"];\n", id,
                left_id, feature.c_str(), node.split_threshold);
  out += buf;
  std::snprintf(buf, sizeof(buf), "  n%d -> n%d [label=\"%s < %.6g\"];\n", id,
                right_id, feature.c_str(), node.split_threshold);
  out += buf;
}

}  // namespace

CausalTree CausalTree::fit(const TreatmentFrame& frame,
                           const TreeConfig& config) {
  config.validate();
  frame.validate();

  auto n = static_cast<std::int64_t>(frame.n_rows());
  std::int64_t arm_floor = std::max<std::int64_t>(config.min_arm_count, 2);
  std::int64_t n_treated = 0;
  for (auto v : frame.w) n_treated += v;
  if (n_treated < arm_floor || n - n_treated < arm_floor) {
    throw FrameError("unfittable frame: arm below " +
                     std::to_string(arm_floor) + " rows");
  }

  FitContext ctx{frame, config, {}, 0.0, {}, true};
  ctx.variance_criterion = config.split_criterion == "variance";
  ctx.min_leaf_rows = config.min_leaf_fraction * static_cast<double>(n);

  // One global train/validation partition per fitted tree, drawn from the
  // seed so refits are reproducible.
  std::vector<std::int32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto rng = Xoshiro256pp::derived(config.seed, RngStream::Validation);
  for (std::int64_t i = n - 1; i > 0; --i) {
    auto j = static_cast<std::int64_t>(
        rng.below(static_cast<std::uint64_t>(i + 1)));
    std::swap(perm[i], perm[j]);
  }
  auto n_val = static_cast<std::int64_t>(
      std::ceil(config.validation_fraction * static_cast<double>(n)));
  ctx.is_val.assign(n, 0);
  for (std::int64_t i = 0; i < n_val; ++i) ctx.is_val[perm[i]] = 1;

  ctx.feature_order.resize(frame.n_features());
  std::iota(ctx.feature_order.begin(), ctx.feature_order.end(), 0u);
  std::sort(ctx.feature_order.begin(), ctx.feature_order.end(),
            [&](std::size_t a, std::size_t b) {
              return frame.feature_names[a] < frame.feature_names[b];
            });

  std::vector<std::int32_t> all_rows(n);
  std::iota(all_rows.begin(), all_rows.end(), 0);

  CausalTree tree;
  tree.config_ = config;
  tree.frame_sha256_ = frame.fingerprint();
  tree.feature_names_ = frame.feature_names;
  for (std::size_t f = 0; f < frame.n_features(); ++f) {
    tree.feature_index_[frame.feature_names[f]] = f;
  }
  tree.root_ = grow(ctx, all_rows, 0);
  return tree;
}

const TreeNode& CausalTree::predict(std::span<const double> x) const {
  if (x.size() != feature_names_.size()) {
    throw SchemaError("prediction vector length " + std::to_string(x.size()) +
                      " does not match schema of " +
                      std::to_string(feature_names_.size()) + " features");
  }
  const TreeNode* node = root_.get();
  while (!node->is_leaf()) {
    auto it = feature_index_.find(node->split_feature);
    if (it == feature_index_.end()) {
      throw SchemaError("split feature not in schema: " + node->split_feature);
    }
    node = x[it->second] >= node->split_threshold ? node->left.get()
                                                  : node->right.get();
  }
  return *node;
}

CausalTree CausalTree::trimmed(double alpha_display) const {
  CausalTree out;
  out.config_ = config_;
  out.frame_sha256_ = frame_sha256_;
  out.feature_names_ = feature_names_;
  out.feature_index_ = feature_index_;
  out.root_ = alpha_display >= 1.0 ? copy_node(*root_)
                                   : trim_node(*root_, alpha_display);
  if (alpha_display >= 1.0) {
    // Identity copy still refreshes the display marks.
    struct Marker {
      double alpha;
      void operator()(TreeNode& n) {
        n.significant = n.effect.p_value < alpha;
        if (!n.is_leaf()) {
          (*this)(*n.left);
          (*this)(*n.right);
        }
      }
    } mark{alpha_display};
    mark(*out.root_);
  }
  return out;
}

std::string CausalTree::to_json() const {
  nlohmann::json j;
  j["config"] = {
      {"min_leaf_fraction", config_.min_leaf_fraction},
      {"max_depth", config_.max_depth},
      {"alpha", config_.alpha},
      {"min_arm_count", config_.min_arm_count},
      {"validation_fraction", config_.validation_fraction},
      {"candidate_thresholds_per_feature",
       config_.candidate_thresholds_per_feature},
      {"split_criterion", config_.split_criterion},
      {"seed", config_.seed},
  };
  j["seed"] = config_.seed;
  j["frame_sha256"] = frame_sha256_;
  j["root"] = node_to_json(*root_);
  return j.dump(2) + "\n";
}

CausalTree CausalTree::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("bad tree document: ") + e.what());
  }
  CausalTree tree;
  try {
    const auto& c = j.at("config");
    tree.config_.min_leaf_fraction = c.at("min_leaf_fraction").get<double>();
    tree.config_.max_depth = c.at("max_depth").get<int>();
    tree.config_.alpha = c.at("alpha").get<double>();
    tree.config_.min_arm_count = c.at("min_arm_count").get<std::int64_t>();
    tree.config_.validation_fraction =
        c.at("validation_fraction").get<double>();
    tree.config_.candidate_thresholds_per_feature =
        c.at("candidate_thresholds_per_feature").get<int>();
    tree.config_.split_criterion = c.at("split_criterion").get<std::string>();
    tree.config_.seed = j.at("seed").get<std::uint64_t>();
    tree.frame_sha256_ = j.at("frame_sha256").get<std::string>();
    tree.root_ = node_from_json(j.at("root"), 0);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("bad tree document: ") + e.what());
  }
  return tree;
}

std::string CausalTree::to_dot() const { return to_dot(config_.alpha); }

std::string CausalTree::to_dot(double highlight_alpha) const {
  std::string out = "digraph causal_tree {\n  node [shape=box];\n";
  int counter = 0;
  node_to_dot(*root_, highlight_alpha, counter, out);
  out += "}\n";
  return out;
}

std::int64_t CausalTree::internal_node_count() const {
  std::int64_t count = 0;
  for_each_node([&](const TreeNode& n) {
    if (!n.is_leaf()) ++count;
  });
  return count;
}

int CausalTree::depth() const {
  int max_depth = 0;
  for_each_node([&](const TreeNode& n) {
    max_depth = std::max(max_depth, n.depth);
  });
  return max_depth;
}

}  // namespace patchfx
