#include "patchfx/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "patchfx/errors.hpp"
#include "patchfx/rng.hpp"

namespace patchfx {

bool EffectBox::contains(std::span<const double> x) const {
  for (std::size_t d = 0; d < lo.size(); ++d) {
    if (!(x[d] >= lo[d] && x[d] < hi[d])) return false;
  }
  return true;
}

namespace {

std::vector<double> draw_features(const SyntheticSpec& spec,
                                  Xoshiro256pp& rng) {
  std::vector<double> x(spec.n_features());
  for (int d = 0; d < spec.n_continuous; ++d) x[d] = rng.uniform();
  for (int d = 0; d < spec.n_binary; ++d) {
    x[spec.n_continuous + d] = rng.bernoulli(0.5) ? 1.0 : 0.0;
  }
  return x;
}

double baseline_at(const SyntheticSpec& spec, std::span<const double> x) {
  double f = spec.baseline_intercept;
  for (std::size_t d = 0; d < spec.baseline_slopes.size(); ++d) {
    f += spec.baseline_slopes[d] * x[d];
  }
  return f;
}

}  // namespace

void SyntheticSpec::validate() const {
  if (n_units < 1) throw SpecError("n_units must be positive");
  if (n_continuous < 0 || n_binary < 0 || n_features() < 1) {
    throw SpecError("at least one feature dimension is required");
  }
  if (!(p_w > 0.0 && p_w < 1.0)) throw SpecError("p_w must lie in (0,1)");
  if (noise_sigma < 0.0) throw SpecError("noise_sigma must be non-negative");
  if (!baseline_slopes.empty() &&
      baseline_slopes.size() != static_cast<std::size_t>(n_features())) {
    throw SpecError("baseline slopes must match the feature count");
  }
  if (boxes.empty()) throw SpecError("tau requires at least one box");
  auto dims = static_cast<std::size_t>(n_features());
  for (const auto& box : boxes) {
    if (box.lo.size() != dims || box.hi.size() != dims) {
      throw SpecError("box bounds must match the feature count");
    }
    for (std::size_t d = 0; d < dims; ++d) {
      if (!(box.lo[d] < box.hi[d])) {
        throw SpecError("box bounds must satisfy lo < hi in every dimension");
      }
    }
  }
  // Partition check by deterministic sampling: every probe point must fall
  // in exactly one box. Catches overlaps and holes without solving the
  // exact-cover problem.
  auto rng = Xoshiro256pp::derived(0x9e3779b97f4a7c15ULL, RngStream::General);
  for (int probe = 0; probe < 1000; ++probe) {
    std::vector<double> x(dims);
    for (int d = 0; d < n_continuous; ++d) x[d] = rng.uniform();
    for (int d = 0; d < n_binary; ++d) {
      x[n_continuous + d] = rng.bernoulli(0.5) ? 1.0 : 0.0;
    }
    int hits = 0;
    for (const auto& box : boxes) hits += box.contains(x) ? 1 : 0;
    if (hits != 1) {
      throw SpecError(hits == 0 ? "tau boxes leave a hole in feature space"
                                : "tau boxes overlap");
    }
  }
}

double OracleCate::operator()(std::span<const double> x) const {
  for (const auto& box : spec_.boxes) {
    if (box.contains(x)) return box.effect;
  }
  throw SpecError("point outside every tau box");
}

SyntheticResult generate(const SyntheticSpec& spec) {
  spec.validate();

  TreatmentFrame frame;
  frame.outcome_kind =
      spec.binary_outcome ? OutcomeKind::binary_win : OutcomeKind::continuous;
  frame.control_patch = "1.0";
  frame.treated_patch = "1.1";
  frame.label = "synthetic";
  for (int d = 0; d < spec.n_continuous; ++d) {
    frame.feature_names.push_back("x" + std::to_string(d + 1));
    frame.feature_kinds.push_back(FeatureKind::continuous);
  }
  for (int d = 0; d < spec.n_binary; ++d) {
    frame.feature_names.push_back("b" + std::to_string(d + 1));
    frame.feature_kinds.push_back(FeatureKind::binary);
  }
  frame.columns.assign(frame.feature_names.size(), {});
  for (auto& col : frame.columns) {
    col.reserve(static_cast<std::size_t>(spec.n_units));
  }
  frame.w.reserve(static_cast<std::size_t>(spec.n_units));
  frame.y.reserve(static_cast<std::size_t>(spec.n_units));

  OracleCate oracle(spec);
  for (std::int64_t i = 0; i < spec.n_units; ++i) {
    auto idx = static_cast<std::uint64_t>(i);
    auto feat_rng = Xoshiro256pp::derived(spec.seed, RngStream::Features, idx);
    auto assign_rng =
        Xoshiro256pp::derived(spec.seed, RngStream::Assignment, idx);
    auto noise_rng = Xoshiro256pp::derived(spec.seed, RngStream::Noise, idx);

    auto x = draw_features(spec, feat_rng);
    bool w = assign_rng.bernoulli(spec.p_w);
    double signal = baseline_at(spec, x) + (w ? oracle(x) : 0.0);
    double y;
    if (spec.binary_outcome) {
      double p = std::clamp(signal, 0.0, 1.0);
      y = noise_rng.uniform() < p ? 1.0 : 0.0;
    } else {
      y = signal + noise_rng.normal(0.0, spec.noise_sigma);
    }
    for (std::size_t d = 0; d < x.size(); ++d) {
      frame.columns[d].push_back(x[d]);
    }
    frame.w.push_back(w ? 1 : 0);
    frame.y.push_back(y);
  }
  frame.validate();
  return {std::move(frame), std::move(oracle)};
}

TreeEvaluation evaluate_tree(const CausalTree& tree, const OracleCate& oracle,
                             std::int64_t n_eval, std::uint64_t seed) {
  const auto& spec = oracle.spec();
  TreeEvaluation eval;
  eval.n_eval = n_eval;
  double abs_err = 0.0;
  std::int64_t sign_hits = 0;
  for (std::int64_t i = 0; i < n_eval; ++i) {
    auto rng = Xoshiro256pp::derived(seed, RngStream::Evaluation,
                                     static_cast<std::uint64_t>(i));
    auto x = draw_features(spec, rng);
    double truth = oracle(x);
    double pred = tree.predict(x).effect.tau;
    abs_err += std::fabs(pred - truth);
    auto sgn = [](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };
    if (sgn(pred) == sgn(truth)) ++sign_hits;
  }
  if (n_eval > 0) {
    eval.mean_absolute_cate_error = abs_err / static_cast<double>(n_eval);
    eval.sign_agreement =
        static_cast<double>(sign_hits) / static_cast<double>(n_eval);
  }
  return eval;
}

SyntheticSpec SyntheticSpec::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("bad synthetic spec: ") + e.what());
  }
  SyntheticSpec spec;
  try {
    spec.n_units = j.at("n_units").get<std::int64_t>();
    spec.n_continuous = j.at("n_continuous").get<int>();
    spec.n_binary = j.value("n_binary", 0);
    if (j.contains("baseline")) {
      const auto& b = j.at("baseline");
      spec.baseline_intercept = b.value("intercept", 0.0);
      if (b.contains("slopes")) {
        spec.baseline_slopes = b.at("slopes").get<std::vector<double>>();
      }
    }
    for (const auto& box : j.at("tau").at("boxes")) {
      EffectBox eb;
      eb.lo = box.at("lo").get<std::vector<double>>();
      eb.hi = box.at("hi").get<std::vector<double>>();
      eb.effect = box.at("effect").get<double>();
      spec.boxes.push_back(std::move(eb));
    }
    spec.p_w = j.value("p_w", 0.5);
    spec.noise_sigma = j.value("noise_sigma", 0.0);
    spec.binary_outcome = j.value("binary_outcome", false);
    spec.seed = j.value("seed", std::uint64_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("bad synthetic spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

std::string SyntheticSpec::to_json() const {
  nlohmann::json j;
  j["n_units"] = n_units;
  j["n_continuous"] = n_continuous;
  j["n_binary"] = n_binary;
  j["baseline"] = {{"intercept", baseline_intercept}};
  if (!baseline_slopes.empty()) j["baseline"]["slopes"] = baseline_slopes;
  j["tau"]["boxes"] = nlohmann::json::array();
  for (const auto& box : boxes) {
    j["tau"]["boxes"].push_back(
        {{"lo", box.lo}, {"hi", box.hi}, {"effect", box.effect}});
  }
  j["p_w"] = p_w;
  j["noise_sigma"] = noise_sigma;
  j["binary_outcome"] = binary_outcome;
  j["seed"] = seed;
  return j.dump(2) + "\n";
}

}  // namespace patchfx
