#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace patchfx {

// Streaming first/second moments (Welford). Unbiased variance.
struct SummaryStats {
  std::int64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }

  double variance() const {  // requires n >= 2
    return m2 / static_cast<double>(n - 1);
  }
};

SummaryStats summarize(std::span<const double> xs);

struct EffectEstimate {
  double tau = 0.0;      // mean_treated - mean_control
  double se = 0.0;
  double p_value = 1.0;  // two-sided
  std::int64_t n_treated = 0;
  std::int64_t n_control = 0;
  double mean_treated = 0.0;
  double mean_control = 0.0;
};

// Difference-in-means treatment effect with Welch t-test inference.
// Each arm needs >= 2 samples for a variance; otherwise throws FrameError
// ("insufficient arm for inference"). se == 0 yields p = 1 by convention.
EffectEstimate estimate_effect(std::span<const double> treated,
                               std::span<const double> control);
EffectEstimate estimate_effect(const SummaryStats& treated,
                               const SummaryStats& control);

// Two-sided tail probabilities.
double two_sided_t_pvalue(double t, double df);
double two_sided_normal_pvalue(double z);

// Welch-Satterthwaite degrees of freedom from per-arm variance/count.
double welch_df(double var_a, std::int64_t n_a, double var_b,
                std::int64_t n_b);

struct PearsonResult {
  double r = 0.0;
  double p_value = 1.0;
  std::int64_t n = 0;
};

// Pearson correlation over paired samples; p via the t transform with
// n-2 degrees of freedom. Requires n >= 3 and nonzero variance in both
// series (throws FrameError otherwise).
PearsonResult pearson(std::span<const double> a, std::span<const double> b);

}  // namespace patchfx
