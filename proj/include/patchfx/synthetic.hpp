#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "patchfx/causal_tree.hpp"
#include "patchfx/frames.hpp"

namespace patchfx {

// Axis-aligned box with a constant planted effect. Bounds are closed below
// and open above (lo <= x < hi), matching the tree's ">= threshold goes
// left" descent convention.
struct EffectBox {
  std::vector<double> lo;
  std::vector<double> hi;
  double effect = 0.0;

  bool contains(std::span<const double> x) const;
};

// Generator description for frames with analytically known CATE. Features
// are continuous uniform [0,1) draws named x1..xk plus optional binary
// coin-flip features b1..bm; treatment is Bernoulli(p_w) independent of x;
// y = baseline(x) + w * tau(x) + Normal(0, noise_sigma^2). In binary
// outcome mode y ~ Bernoulli(clamp(baseline + w * tau, 0, 1)) instead.
struct SyntheticSpec {
  std::int64_t n_units = 0;
  int n_continuous = 0;
  int n_binary = 0;
  double baseline_intercept = 0.0;
  std::vector<double> baseline_slopes;  // empty means constant baseline
  std::vector<EffectBox> boxes;         // must partition the feature space
  double p_w = 0.5;
  double noise_sigma = 0.0;
  bool binary_outcome = false;
  std::uint64_t seed = 0;

  int n_features() const { return n_continuous + n_binary; }
  // Structural validation plus a deterministic point-sampling partition
  // check; throws SpecError.
  void validate() const;

  static SyntheticSpec from_json(const std::string& text);
  std::string to_json() const;
};

// The planted truth: exact tau(x) by box lookup.
class OracleCate {
 public:
  explicit OracleCate(SyntheticSpec spec) : spec_(std::move(spec)) {}
  double operator()(std::span<const double> x) const;
  const SyntheticSpec& spec() const { return spec_; }

 private:
  SyntheticSpec spec_;
};

struct SyntheticResult {
  TreatmentFrame frame;
  OracleCate oracle;
};

// Fully seed-determined; unit i draws from generators derived as
// (seed, stream, i), so generation order and threading cannot change the
// output.
SyntheticResult generate(const SyntheticSpec& spec);

struct TreeEvaluation {
  double mean_absolute_cate_error = 0.0;
  double sign_agreement = 0.0;  // share of points with matching effect sign
  std::int64_t n_eval = 0;
};

// Compare tree predictions against the planted truth on fresh points drawn
// from the evaluation stream of `seed`.
TreeEvaluation evaluate_tree(const CausalTree& tree, const OracleCate& oracle,
                             std::int64_t n_eval, std::uint64_t seed);

}  // namespace patchfx
