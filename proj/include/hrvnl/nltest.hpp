#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hrvnl/glc.hpp"
#include "hrvnl/series.hpp"

namespace hrvnl {

enum class Measure { NCI, IS, GLC };

// NCI decreases under nonlinear dynamics (lower tail); IS and GLC increase.
enum class Tail { Lower, Upper };

const char* measure_name(Measure m);
Measure parse_measure(const std::string& name);

struct NonlinearityResult {
  Measure measure = Measure::NCI;
  double ni_original = 0.0;
  std::vector<double> surrogate_values;
  double threshold = 0.0;
  Tail tail = Tail::Lower;
  bool rejected = false;
  double ni_median = 0.0;
  double delta_ni = 0.0;
  double alpha = 0.05;
  std::uint64_t seed = 0;
};

// Nearest-rank percentile: the ceil(p * n / 100)-th smallest value.
double percentile(std::vector<double> values, double p);

// Pure assembly of a NonlinearityResult from the original index and its
// surrogate distribution; the rejection flag and delta are recomputable from
// the serialized fields.
NonlinearityResult assemble_result(Measure measure, double ni_original,
                                   std::vector<double> surrogate_values, double alpha,
                                   std::uint64_t seed);

// Surrogate-data test for one measure. Generates the IAAFT ensemble from a
// seed derived from (params.seed, measure), evaluates the index on the
// original and every surrogate, and compares against the percentile
// threshold. For GLC a calibration curve built on this series' marginal may
// be supplied; surrogates share the marginal, so one curve serves all.
// Throws TestInvalidError when the estimator fails on >= 10% of surrogates.
NonlinearityResult detect(const NormalizedSeries& series, Measure measure,
                          const AnalysisParams& params,
                          const CalibrationCurve* glc_curve = nullptr);

}  // namespace hrvnl
