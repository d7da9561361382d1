#include "hrvnl/nltest.hpp"

#include <algorithm>
#include <cmath>

#include "hrvnl/entropy.hpp"
#include "hrvnl/errors.hpp"
#include "hrvnl/info_storage.hpp"
#include "hrvnl/rng.hpp"
#include "hrvnl/surrogate.hpp"

namespace hrvnl {

const char* measure_name(Measure m) {
  switch (m) {
    case Measure::NCI: return "NCI";
    case Measure::IS: return "IS";
    case Measure::GLC: return "GLC";
  }
  return "?";
}

Measure parse_measure(const std::string& name) {
  if (name == "NCI" || name == "nci") return Measure::NCI;
  if (name == "IS" || name == "is") return Measure::IS;
  if (name == "GLC" || name == "glc") return Measure::GLC;
  throw ParameterError("unknown measure: " + name);
}

double percentile(std::vector<double> values, double p) {
  if (values.empty()) throw ShapeError("percentile: empty input");
  if (!(p > 0.0 && p < 100.0)) throw ParameterError("percentile: p must lie in (0, 100)");
  const std::size_t n = values.size();
  std::size_t rank = std::size_t(std::ceil(p * double(n) / 100.0));
  if (rank < 1) rank = 1;
  if (rank > n) rank = n;
  std::nth_element(values.begin(), values.begin() + std::ptrdiff_t(rank - 1), values.end());
  return values[rank - 1];
}

NonlinearityResult assemble_result(Measure measure, double ni_original,
                                   std::vector<double> surrogate_values, double alpha,
                                   std::uint64_t seed) {
  NonlinearityResult out;
  out.measure = measure;
  out.ni_original = ni_original;
  out.alpha = alpha;
  out.seed = seed;
  out.tail = (measure == Measure::NCI) ? Tail::Lower : Tail::Upper;

  out.ni_median = percentile(surrogate_values, 50.0);
  if (out.tail == Tail::Lower) {
    out.threshold = percentile(surrogate_values, 100.0 * alpha);
    out.rejected = ni_original < out.threshold;
    out.delta_ni = out.ni_median - ni_original;
  } else {
    out.threshold = percentile(surrogate_values, 100.0 * (1.0 - alpha));
    out.rejected = ni_original > out.threshold;
    out.delta_ni = ni_original - out.ni_median;
  }
  out.surrogate_values = std::move(surrogate_values);
  return out;
}

NonlinearityResult detect(const NormalizedSeries& series, Measure measure,
                          const AnalysisParams& params, const CalibrationCurve* glc_curve) {
  params.validate();
  const std::uint64_t master = derive_seed(params.seed, std::uint64_t(measure));

  CalibrationCurve own_curve;
  if (measure == Measure::GLC && glc_curve == nullptr) {
    CalibrationOptions opts;
    opts.seed = derive_seed(params.seed, 1000 + std::uint64_t(measure));
    own_curve = calibrate(series.values, opts);
    glc_curve = &own_curve;
  }

  const auto evaluate = [&](const std::vector<double>& values) -> double {
    switch (measure) {
      case Measure::NCI:
        return nci(values, params);
      case Measure::IS:
        return information_storage(values, params.m, params.k);
      case Measure::GLC:
        return glc_index(normalize(values), params.l_max, *glc_curve);
    }
    throw ParameterError("detect: unknown measure");
  };

  const double ni_original = evaluate(series.values);

  const SurrogateEnsemble ensemble =
      make_ensemble(series.values, params.n_s, params.max_iter, master);

  std::vector<double> surrogate_values;
  surrogate_values.reserve(std::size_t(params.n_s));
  std::size_t failures = 0;
  std::string first_failure;
  for (const auto& surrogate : ensemble.surrogates) {
    try {
      surrogate_values.push_back(evaluate(surrogate));
    } catch (const Error& e) {
      ++failures;
      if (first_failure.empty()) first_failure = e.what();
    }
  }
  if (failures * 10 >= std::size_t(params.n_s)) {
    throw TestInvalidError("detect: estimator failed on " + std::to_string(failures) +
                           " of " + std::to_string(params.n_s) +
                           " surrogates (first: " + first_failure + ")");
  }
  return assemble_result(measure, ni_original, std::move(surrogate_values), params.alpha,
                         master);
}

}  // namespace hrvnl
