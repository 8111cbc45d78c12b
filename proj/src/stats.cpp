#include "patchfx/stats.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>

#include "patchfx/errors.hpp"

namespace patchfx {

SummaryStats summarize(std::span<const double> xs) {
  SummaryStats s;
  for (double x : xs) s.add(x);
  return s;
}

double two_sided_t_pvalue(double t, double df) {
  if (df <= 0.0) return 1.0;
  boost::math::students_t_distribution<double> dist(df);
  double p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
  return std::min(p, 1.0);
}

double two_sided_normal_pvalue(double z) {
  return std::min(std::erfc(std::fabs(z) / std::sqrt(2.0)), 1.0);
}

double welch_df(double var_a, std::int64_t n_a, double var_b,
                std::int64_t n_b) {
  double ra = var_a / static_cast<double>(n_a);
  double rb = var_b / static_cast<double>(n_b);
  double denom = ra * ra / static_cast<double>(n_a - 1) +
                 rb * rb / static_cast<double>(n_b - 1);
  if (denom <= 0.0) return 0.0;  // both variances zero
  return (ra + rb) * (ra + rb) / denom;
}

EffectEstimate estimate_effect(const SummaryStats& treated,
                               const SummaryStats& control) {
  if (treated.n < 2 || control.n < 2) {
    throw FrameError("insufficient arm for inference");
  }
  EffectEstimate e;
  e.n_treated = treated.n;
  e.n_control = control.n;
  e.mean_treated = treated.mean;
  e.mean_control = control.mean;
  e.tau = treated.mean - control.mean;

  // Welford's m2 can carry a tiny negative residue for constant data.
  double v1 = std::max(treated.variance(), 0.0);
  double v0 = std::max(control.variance(), 0.0);
  double se2 = v1 / static_cast<double>(treated.n) +
               v0 / static_cast<double>(control.n);
  e.se = std::sqrt(se2);
  if (e.se == 0.0) {
    e.p_value = 1.0;  // constant arms: no evidence either way
    return e;
  }
  double t = e.tau / e.se;
  double df = welch_df(v1, treated.n, v0, control.n);
  e.p_value = two_sided_t_pvalue(t, df);
  return e;
}

EffectEstimate estimate_effect(std::span<const double> treated,
                               std::span<const double> control) {
  return estimate_effect(summarize(treated), summarize(control));
}

PearsonResult pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw FrameError("pearson requires equal-length series");
  }
  auto n = static_cast<std::int64_t>(a.size());
  if (n < 3) throw FrameError("pearson requires at least 3 pairs");

  double mean_a = 0.0, mean_b = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    mean_a += a[i];
    mean_b += b[i];
  }
  mean_a /= static_cast<double>(n);
  mean_b /= static_cast<double>(n);

  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    double da = a[i] - mean_a;
    double db = b[i] - mean_b;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) {
    throw FrameError("pearson undefined for constant series");
  }
  PearsonResult res;
  res.n = n;
  res.r = std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
  double df = static_cast<double>(n - 2);
  double denom = 1.0 - res.r * res.r;
  if (denom <= 0.0) {
    res.p_value = 0.0;  // perfectly collinear
  } else {
    double t = res.r * std::sqrt(df / denom);
    res.p_value = two_sided_t_pvalue(t, df);
  }
  return res;
}

}  // namespace patchfx
