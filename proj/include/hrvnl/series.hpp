#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hrvnl {

// An ordered RR-interval recording (milliseconds) or any raw sample sequence.
struct RawSeries {
  std::vector<double> values;
  std::string label;
};

// Zero-mean, unit-sample-standard-deviation series; the estimator input.
struct NormalizedSeries {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

// Estimator parameters shared across the analysis pipeline.
struct AnalysisParams {
  int m = 2;            // embedding order (past-history length)
  double r = 0.2;       // tolerance in units of the series standard deviation
  int k = 10;           // neighbor count for the nearest-neighbor estimator
  int l_max = 2;        // maximum autocorrelation lag for GLC
  int n_s = 100;        // surrogate count
  double alpha = 0.05;  // significance level
  std::uint64_t seed = 0;
  int max_iter = 1000;  // IAAFT iteration cap

  // Throws ParameterError on violation of the documented invariants.
  void validate() const;
};

// Aligned (history, target) pairs. Histories are stored most-recent-first:
// history(i)[0] is the sample immediately preceding targets[i].
struct EmbeddedPatterns {
  std::vector<double> histories;  // flattened, count x m
  std::vector<double> targets;
  std::size_t m = 0;
  std::size_t count = 0;

  const double* history(std::size_t i) const { return histories.data() + i * m; }
};

// Mean and sample standard deviation (divisor N-1).
struct Moments {
  double mean;
  double stddev;
};
Moments moments(const std::vector<double>& v);

// Zero mean, unit sample standard deviation; order preserved.
// Throws DegenerateInputError on constant input, InsufficientDataError if N < 2.
NormalizedSeries normalize(const std::vector<double>& values);
NormalizedSeries normalize(const RawSeries& series);

// Zero-phase (forward-backward) Butterworth high-pass detrend.
// cutoff_fraction is in cycles per beat, 0 < cutoff < 0.5. Output has zero mean
// and the same length as the input.
std::vector<double> detrend_highpass(const std::vector<double>& values,
                                     double cutoff_fraction);

// Contiguous subsequence [start, start + length).
std::vector<double> window(const std::vector<double>& values, std::size_t start,
                           std::size_t length);

// Delay embedding with order m; N - m pairs. Throws InsufficientDataError if N <= m.
EmbeddedPatterns embed(const NormalizedSeries& series, int m);

}  // namespace hrvnl
