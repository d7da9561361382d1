#pragma once

#include <vector>

#include "hrvnl/series.hpp"

namespace hrvnl {

enum class PatternNorm {
  Euclidean,  // default; used by the NCI kernel estimator
  Chebyshev,  // classical SampEn variant
};

// Per-reference neighbor counts within tolerance r (closed ball, self excluded).
// joint_matches[n] <= history_matches[n] for every n.
struct NeighborhoodCounts {
  std::vector<std::size_t> history_matches;
  std::vector<std::size_t> joint_matches;
};

NeighborhoodCounts neighborhood_counts(const NormalizedSeries& series, int m, double r,
                                       PatternNorm norm = PatternNorm::Euclidean);

// Global Sample Entropy, in nats: -ln<p(joint)> + ln<p(history)>.
// Throws UndefinedEntropyError when no pattern pair matches at all.
double sample_entropy(const NormalizedSeries& series, int m, double r,
                      PatternNorm norm = PatternNorm::Euclidean);

// Local Sample Entropy, in nats: -ln<p(target | history)>, where an isolated
// reference history contributes the maximum-uncertainty probability 1/(N-m+1).
double local_sample_entropy(const NormalizedSeries& series, int m, double r,
                            PatternNorm norm = PatternNorm::Euclidean);

// Normalized Complexity Index: local sample entropy on the series re-normalized
// to unit variance.
double nci(const std::vector<double>& values, const AnalysisParams& params,
           PatternNorm norm = PatternNorm::Euclidean);

}  // namespace hrvnl
