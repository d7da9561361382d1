#include "hrvnl/entropy.hpp"

#include <cmath>

#include "hrvnl/errors.hpp"

namespace hrvnl {

namespace {

inline double history_dist2(const double* a, const double* b, std::size_t m) {
  double acc = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    double d = a[j] - b[j];
    acc += d * d;
  }
  return acc;
}

inline double history_dist_cheb(const double* a, const double* b, std::size_t m) {
  double acc = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    double d = std::fabs(a[j] - b[j]);
    if (d > acc) acc = d;
  }
  return acc;
}

}  // namespace

NeighborhoodCounts neighborhood_counts(const NormalizedSeries& series, int m, double r,
                                       PatternNorm norm) {
  if (!(r > 0.0)) throw ParameterError("neighborhood_counts: r must be > 0");
  const EmbeddedPatterns pat = embed(series, m);
  const std::size_t count = pat.count;
  NeighborhoodCounts out;
  out.history_matches.assign(count, 0);
  out.joint_matches.assign(count, 0);
  const double r2 = r * r;

  for (std::size_t i = 0; i < count; ++i) {
    const double* hi = pat.history(i);
    for (std::size_t j = i + 1; j < count; ++j) {
      const double* hj = pat.history(j);
      bool hist_match, joint_match;
      if (norm == PatternNorm::Euclidean) {
        const double dh2 = history_dist2(hi, hj, pat.m);
        hist_match = dh2 <= r2;
        const double dt = pat.targets[i] - pat.targets[j];
        joint_match = dh2 + dt * dt <= r2;
      } else {
        const double dh = history_dist_cheb(hi, hj, pat.m);
        hist_match = dh <= r;
        const double dt = std::fabs(pat.targets[i] - pat.targets[j]);
        joint_match = std::max(dh, dt) <= r;
      }
      if (hist_match) {
        ++out.history_matches[i];
        ++out.history_matches[j];
      }
      if (joint_match) {
        ++out.joint_matches[i];
        ++out.joint_matches[j];
      }
    }
  }
  return out;
}

double sample_entropy(const NormalizedSeries& series, int m, double r, PatternNorm norm) {
  const std::size_t n = series.size();
  if (n <= std::size_t(m) + 1) throw InsufficientDataError("sample_entropy: series too short");
  const NeighborhoodCounts counts = neighborhood_counts(series, m, r, norm);
  const std::size_t count = counts.history_matches.size();

  double hist_total = 0.0, joint_total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    hist_total += double(counts.history_matches[i]);
    joint_total += double(counts.joint_matches[i]);
  }
  if (hist_total == 0.0 || joint_total == 0.0)
    throw UndefinedEntropyError("sample_entropy: no matching pattern pairs");

  const double denom = double(count) * double(count - 1);
  const double p_hist = hist_total / denom;
  const double p_joint = joint_total / denom;
  return -std::log(p_joint) + std::log(p_hist);
}

double local_sample_entropy(const NormalizedSeries& series, int m, double r,
                            PatternNorm norm) {
  const std::size_t n = series.size();
  if (n <= std::size_t(m) + 1)
    throw InsufficientDataError("local_sample_entropy: series too short");
  const NeighborhoodCounts counts = neighborhood_counts(series, m, r, norm);
  const std::size_t count = counts.history_matches.size();

  // Singleton correction: an isolated reference history contributes the
  // maximum uncertainty computable over the series.
  const double p_isolated = 1.0 / double(n - std::size_t(m) + 1);

  double sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    if (counts.history_matches[i] == 0)
      sum += p_isolated;
    else
      sum += double(counts.joint_matches[i]) / double(counts.history_matches[i]);
  }
  const double mean_p = sum / double(count);
  if (!(mean_p > 0.0))
    throw UndefinedEntropyError("local_sample_entropy: zero mean conditional probability");
  return -std::log(mean_p);
}

double nci(const std::vector<double>& values, const AnalysisParams& params,
           PatternNorm norm) {
  return local_sample_entropy(normalize(values), params.m, params.r, norm);
}

}  // namespace hrvnl
