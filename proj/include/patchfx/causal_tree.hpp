#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "patchfx/frames.hpp"
#include "patchfx/stats.hpp"

namespace patchfx {

struct TreeConfig {
  double min_leaf_fraction = 0.05;  // of root samples, per child
  int max_depth = 10;
  double alpha = 0.05;              // gate level, train and validation
  std::int64_t min_arm_count = 10;  // per child, per arm
  double validation_fraction = 0.25;
  int candidate_thresholds_per_feature = 100;
  // "variance": minimize sample-weighted expected variance of child effect
  // estimates. "heterogeneity": maximize sample-weighted spread of child
  // effects instead.
  std::string split_criterion = "variance";
  std::uint64_t seed = 0;

  void validate() const;  // throws ConfigError
};

struct TreeNode {
  EffectEstimate effect;  // recomputed on all rows at the node
  int depth = 0;
  std::int64_t samples = 0;  // n_treated + n_control
  std::string split_feature;  // empty for leaves
  double split_threshold = 0.0;
  std::unique_ptr<TreeNode> left;   // feature >= threshold
  std::unique_ptr<TreeNode> right;  // feature < threshold
  bool significant = false;  // display mark, set by trim

  bool is_leaf() const { return left == nullptr; }
};

// Greedy recursive partition of a treatment frame. Each split minimizes the
// expected variance of the child effect estimates over training rows and
// must pass a two-stage significance gate: the child-effect difference is
// z-tested at alpha on the training partition, then must replicate in sign
// and significance on a held-out validation partition. Reported node
// effects pool all rows at the node.
class CausalTree {
 public:
  static CausalTree fit(const TreatmentFrame& frame, const TreeConfig& config);

  const TreeNode& root() const { return *root_; }
  const TreeConfig& config() const { return config_; }
  std::uint64_t seed() const { return config_.seed; }
  const std::string& frame_fingerprint() const { return frame_sha256_; }
  const std::vector<std::string>& feature_names() const {
    return feature_names_;
  }

  // Deterministic descent: go left iff feature >= threshold. x must be in
  // the fitted frame's schema order.
  const TreeNode& predict(std::span<const double> x) const;

  // Copy with every subtree containing no node of p < alpha_display
  // collapsed to a leaf; significant nodes marked. The original tree is
  // untouched.
  CausalTree trimmed(double alpha_display) const;

  std::string to_json() const;
  // DOT rendering; nodes with p < highlight_alpha are filled. The default
  // highlights at the fit alpha.
  std::string to_dot() const;
  std::string to_dot(double highlight_alpha) const;
  static CausalTree from_json(const std::string& text);

  // Pre-order traversal.
  template <typename Fn>
  void for_each_node(Fn&& fn) const {
    walk(*root_, fn);
  }

  std::int64_t internal_node_count() const;
  int depth() const;

 private:
  CausalTree() = default;

  template <typename Fn>
  static void walk(const TreeNode& node, Fn& fn) {
    fn(node);
    if (!node.is_leaf()) {
      walk(*node.left, fn);
      walk(*node.right, fn);
    }
  }

  std::unique_ptr<TreeNode> root_;
  TreeConfig config_;
  std::string frame_sha256_;
  std::vector<std::string> feature_names_;
  std::unordered_map<std::string, std::size_t> feature_index_;
};

}  // namespace patchfx
