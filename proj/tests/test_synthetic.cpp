#include "patchfx/synthetic.hpp"

#include <cmath>

#include "doctest.h"
#include "json.hpp"
#include "patchfx/errors.hpp"
#include "patchfx/stats.hpp"

using namespace patchfx;

namespace {

SyntheticSpec two_box_spec(std::int64_t n, std::uint64_t seed,
                           double lo_effect = -1.0, double hi_effect = 1.0) {
  SyntheticSpec spec;
  spec.n_units = n;
  spec.n_continuous = 2;
  spec.boxes = {
      EffectBox{{0.0, 0.0}, {0.5, 1.0}, lo_effect},
      EffectBox{{0.5, 0.0}, {1.0, 1.0}, hi_effect},
  };
  spec.noise_sigma = 0.5;
  spec.seed = seed;
  return spec;
}

}  // namespace

TEST_CASE("spec validation accepts a partition and rejects holes/overlaps") {
  CHECK_NOTHROW(two_box_spec(100, 1).validate());

  auto hole = two_box_spec(100, 1);
  hole.boxes[0].hi[0] = 0.4;  // nothing covers x1 in [0.4, 0.5)
  CHECK_THROWS_WITH_AS(hole.validate(),
                       "tau boxes leave a hole in feature space", SpecError);

  auto overlap = two_box_spec(100, 1);
  overlap.boxes[0].hi[0] = 0.6;
  CHECK_THROWS_WITH_AS(overlap.validate(), "tau boxes overlap", SpecError);

  auto bad = two_box_spec(0, 1);
  CHECK_THROWS_AS(bad.validate(), SpecError);
  bad = two_box_spec(100, 1);
  bad.p_w = 1.0;
  CHECK_THROWS_AS(bad.validate(), SpecError);
  bad = two_box_spec(100, 1);
  bad.noise_sigma = -0.1;
  CHECK_THROWS_AS(bad.validate(), SpecError);
  bad = two_box_spec(100, 1);
  bad.boxes.clear();
  CHECK_THROWS_AS(bad.validate(), SpecError);
  bad = two_box_spec(100, 1);
  bad.boxes[0].lo[1] = 2.0;  // lo >= hi
  CHECK_THROWS_AS(bad.validate(), SpecError);
  bad = two_box_spec(100, 1);
  bad.baseline_slopes = {1.0};  // wrong arity
  CHECK_THROWS_AS(bad.validate(), SpecError);
  bad = two_box_spec(100, 1);
  bad.boxes[0].lo = {0.0};  // wrong arity
  CHECK_THROWS_AS(bad.validate(), SpecError);
}

TEST_CASE("binary feature dimensions take part in the partition check") {
  SyntheticSpec spec;
  spec.n_units = 100;
  spec.n_continuous = 1;
  spec.n_binary = 1;
  spec.boxes = {
      EffectBox{{0.0, 0.0}, {1.0, 1.0}, -1.0},  // b1 = 0
      EffectBox{{0.0, 1.0}, {1.0, 2.0}, 1.0},   // b1 = 1
  };
  spec.seed = 5;
  CHECK_NOTHROW(spec.validate());

  auto hole = spec;
  hole.boxes[1].lo[1] = 1.5;  // b1 = 1 no longer covered
  CHECK_THROWS_WITH_AS(hole.validate(),
                       "tau boxes leave a hole in feature space", SpecError);

  auto result = generate(spec);
  CHECK(result.frame.feature_names ==
        std::vector<std::string>{"x1", "b1"});
  CHECK(result.frame.feature_kinds[1] == FeatureKind::binary);
  for (double v : result.frame.columns[1]) {
    CHECK((v == 0.0 || v == 1.0));
  }
}

TEST_CASE("spec JSON round trip and error reporting") {
  auto spec = two_box_spec(500, 77);
  spec.baseline_intercept = 0.25;
  spec.baseline_slopes = {0.1, -0.2};
  spec.p_w = 0.4;

  auto text = spec.to_json();
  auto back = SyntheticSpec::from_json(text);
  CHECK(back.n_units == spec.n_units);
  CHECK(back.n_continuous == spec.n_continuous);
  CHECK(back.n_binary == spec.n_binary);
  CHECK(back.baseline_intercept == spec.baseline_intercept);
  CHECK(back.baseline_slopes == spec.baseline_slopes);
  CHECK(back.boxes.size() == spec.boxes.size());
  CHECK(back.boxes[1].effect == 1.0);
  CHECK(back.p_w == spec.p_w);
  CHECK(back.noise_sigma == spec.noise_sigma);
  CHECK(back.seed == spec.seed);
  CHECK(back.to_json() == text);

  CHECK_THROWS_AS(SyntheticSpec::from_json("nope"), SpecError);
  CHECK_THROWS_AS(SyntheticSpec::from_json("{\"n_units\": 10}"), SpecError);
  // Structurally sound JSON with a broken partition still fails validate.
  auto holey = two_box_spec(100, 1);
  holey.boxes[0].hi[0] = 0.4;
  nlohmann::json j = nlohmann::json::parse(holey.to_json());
  CHECK_THROWS_WITH_AS(SyntheticSpec::from_json(j.dump()),
                       "tau boxes leave a hole in feature space", SpecError);
}

TEST_CASE("generation is seed-determined and carries frame metadata") {
  auto spec = two_box_spec(800, 123);
  auto a = generate(spec);
  auto b = generate(spec);
  CHECK(a.frame.to_csv() == b.frame.to_csv());
  CHECK(a.frame.fingerprint() == b.frame.fingerprint());
  CHECK(a.frame.n_rows() == 800);
  CHECK(a.frame.label == "synthetic");
  CHECK(a.frame.control_patch == "1.0");
  CHECK(a.frame.treated_patch == "1.1");
  CHECK(a.frame.outcome_kind == OutcomeKind::continuous);

  auto other = spec;
  other.seed = 124;
  CHECK(generate(other).frame.fingerprint() != a.frame.fingerprint());
}

TEST_CASE("sample ATE matches the planted effect") {
  // tau = +1 on half the space, 0 elsewhere: population ATE = 0.5.
  auto spec = two_box_spec(10000, 2024, 0.0, 1.0);
  auto result = generate(spec);
  std::vector<double> treated, control;
  for (std::size_t i = 0; i < result.frame.n_rows(); ++i) {
    (result.frame.w[i] ? treated : control).push_back(result.frame.y[i]);
  }
  auto est = estimate_effect(treated, control);
  CHECK(std::abs(est.tau - 0.5) < 4.0 * est.se);
  CHECK(est.se < 0.05);
}

TEST_CASE("binary outcome mode plants a win-rate lift") {
  SyntheticSpec spec;
  spec.n_units = 20000;
  spec.n_continuous = 1;
  spec.boxes = {EffectBox{{0.0}, {1.0}, 0.2}};
  spec.baseline_intercept = 0.4;
  spec.binary_outcome = true;
  spec.seed = 55;
  auto result = generate(spec);
  for (double v : result.frame.y) CHECK((v == 0.0 || v == 1.0));
  CHECK(result.frame.outcome_kind == OutcomeKind::binary_win);

  std::vector<double> treated, control;
  for (std::size_t i = 0; i < result.frame.n_rows(); ++i) {
    (result.frame.w[i] ? treated : control).push_back(result.frame.y[i]);
  }
  auto est = estimate_effect(treated, control);
  CHECK(std::abs(est.tau - 0.2) < 4.0 * est.se);
  CHECK(std::abs(est.mean_control - 0.4) < 0.02);
}

TEST_CASE("oracle honours closed-below open-above box bounds") {
  auto spec = two_box_spec(10, 1);
  OracleCate oracle(spec);
  std::vector<double> at_boundary = {0.5, 0.2};
  std::vector<double> below = {0.49999, 0.2};
  std::vector<double> outside = {1.5, 0.2};
  CHECK(oracle(at_boundary) == 1.0);
  CHECK(oracle(below) == -1.0);
  CHECK_THROWS_WITH_AS(oracle(outside), "point outside every tau box",
                       SpecError);
}

TEST_CASE("a fitted tree scores well against the oracle; a stump does not") {
  auto spec = two_box_spec(10000, 99);
  auto result = generate(spec);
  TreeConfig cfg;
  cfg.seed = spec.seed;
  auto tree = CausalTree::fit(result.frame, cfg);
  REQUIRE_FALSE(tree.root().is_leaf());
  CHECK(tree.root().split_feature == "x1");

  auto eval = evaluate_tree(tree, result.oracle, 2000, 7);
  CHECK(eval.n_eval == 2000);
  CHECK(eval.mean_absolute_cate_error <= 0.15);
  CHECK(eval.sign_agreement >= 0.9);

  // Same seed, same verdict.
  auto again = evaluate_tree(tree, result.oracle, 2000, 7);
  CHECK(again.mean_absolute_cate_error == eval.mean_absolute_cate_error);
  CHECK(again.sign_agreement == eval.sign_agreement);

  // A depth-zero stump predicts the (near-zero) pooled effect everywhere;
  // against truth of +/-1 its error is about 1.
  TreeConfig stump_cfg;
  stump_cfg.seed = spec.seed;
  stump_cfg.max_depth = 0;
  auto stump = CausalTree::fit(result.frame, stump_cfg);
  CHECK(stump.root().is_leaf());
  auto stump_eval = evaluate_tree(stump, result.oracle, 2000, 7);
  CHECK(stump_eval.mean_absolute_cate_error > 0.8);
  CHECK(stump_eval.mean_absolute_cate_error < 1.2);

  // Zero evaluation points degrade gracefully.
  auto empty = evaluate_tree(tree, result.oracle, 0, 7);
  CHECK(empty.n_eval == 0);
  CHECK(empty.mean_absolute_cate_error == 0.0);
}
