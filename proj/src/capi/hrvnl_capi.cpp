#include "hrvnl.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "hrvnl/entropy.hpp"
#include "hrvnl/errors.hpp"
#include "hrvnl/glc.hpp"
#include "hrvnl/info_storage.hpp"
#include "hrvnl/nltest.hpp"
#include "hrvnl/pipeline.hpp"
#include "hrvnl/rng.hpp"
#include "hrvnl/series.hpp"
#include "hrvnl/surrogate.hpp"
#include "hrvnl/synth.hpp"

struct hrvnl_series {
  hrvnl::RawSeries data;
};

struct hrvnl_curve {
  hrvnl::CalibrationCurve data;
};

struct hrvnl_ensemble {
  hrvnl::SurrogateEnsemble data;
};

struct hrvnl_result {
  hrvnl::NonlinearityResult data;
};

namespace {

thread_local std::string g_last_error;

hrvnl_status fail(hrvnl_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

hrvnl_status bad_argument(const char* what) {
  return fail(HRVNL_ERR_INVALID_ARGUMENT, std::string("invalid argument: ") + what);
}

// Exception-to-status translation shared by every entry point.
hrvnl_status translate(const std::exception& e) {
  using namespace hrvnl;
  const std::string msg = e.what();
  if (dynamic_cast<const ParameterError*>(&e)) return fail(HRVNL_ERR_INVALID_ARGUMENT, msg);
  if (dynamic_cast<const DegenerateInputError*>(&e))
    return fail(HRVNL_ERR_DEGENERATE_INPUT, msg);
  if (dynamic_cast<const InsufficientDataError*>(&e))
    return fail(HRVNL_ERR_INSUFFICIENT_DATA, msg);
  if (dynamic_cast<const BoundsError*>(&e)) return fail(HRVNL_ERR_BOUNDS, msg);
  if (dynamic_cast<const UndefinedEntropyError*>(&e))
    return fail(HRVNL_ERR_UNDEFINED_ENTROPY, msg);
  if (dynamic_cast<const CalibrationFailureError*>(&e))
    return fail(HRVNL_ERR_CALIBRATION, msg);
  if (dynamic_cast<const ExtrapolationError*>(&e)) return fail(HRVNL_ERR_EXTRAPOLATION, msg);
  if (dynamic_cast<const TestInvalidError*>(&e)) return fail(HRVNL_ERR_TEST_INVALID, msg);
  if (dynamic_cast<const ParseError*>(&e)) return fail(HRVNL_ERR_PARSE, msg);
  if (dynamic_cast<const IoError*>(&e)) return fail(HRVNL_ERR_IO, msg);
  if (dynamic_cast<const ShapeError*>(&e)) return fail(HRVNL_ERR_SHAPE, msg);
  if (dynamic_cast<const DomainError*>(&e)) return fail(HRVNL_ERR_DOMAIN, msg);
  return fail(HRVNL_ERR_INTERNAL, msg);
}

template <typename Fn>
hrvnl_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return translate(e);
  } catch (...) {
    return fail(HRVNL_ERR_INTERNAL, "unknown error");
  }
}

hrvnl::AnalysisParams to_params(const hrvnl_params& p) {
  hrvnl::AnalysisParams out;
  out.m = p.m;
  out.r = p.r;
  out.k = p.k;
  out.l_max = p.l_max;
  out.n_s = p.n_s;
  out.alpha = p.alpha;
  out.seed = p.seed;
  out.max_iter = p.max_iter;
  return out;
}

hrvnl::PreprocessConfig to_preproc(const hrvnl_preproc& p) {
  hrvnl::PreprocessConfig out;
  out.window_start = p.window_start;
  out.window_len = p.window_len;
  out.hp_cutoff = p.hp_cutoff;
  out.detrend = p.detrend != 0;
  out.min_samples = p.min_samples;
  return out;
}

hrvnl_series* wrap(hrvnl::RawSeries series) {
  return new hrvnl_series{std::move(series)};
}

}  // namespace

extern "C" {

const char* hrvnl_last_error(void) { return g_last_error.c_str(); }

const char* hrvnl_version(void) { return "hrvnl 1.0.0"; }

void hrvnl_params_default(hrvnl_params* params) {
  if (!params) return;
  const hrvnl::AnalysisParams d;
  params->m = d.m;
  params->r = d.r;
  params->k = d.k;
  params->l_max = d.l_max;
  params->n_s = d.n_s;
  params->alpha = d.alpha;
  params->seed = d.seed;
  params->max_iter = d.max_iter;
}

void hrvnl_preproc_default(hrvnl_preproc* preproc) {
  if (!preproc) return;
  const hrvnl::PreprocessConfig d;
  preproc->window_start = d.window_start;
  preproc->window_len = d.window_len;
  preproc->hp_cutoff = d.hp_cutoff;
  preproc->detrend = d.detrend ? 1 : 0;
  preproc->min_samples = d.min_samples;
}

hrvnl_status hrvnl_series_create(const double* values, size_t n, const char* label,
                                 hrvnl_series** out) {
  if (!values || !out) return bad_argument("hrvnl_series_create");
  return guarded([&] {
    hrvnl::RawSeries series;
    series.values.assign(values, values + n);
    if (label) series.label = label;
    *out = wrap(std::move(series));
    return HRVNL_OK;
  });
}

hrvnl_status hrvnl_series_load(const char* path, hrvnl_series** out) {
  if (!path || !out) return bad_argument("hrvnl_series_load");
  return guarded([&] {
    *out = wrap(hrvnl::ingest_series(path));
    return HRVNL_OK;
  });
}

void hrvnl_series_free(hrvnl_series* series) { delete series; }

size_t hrvnl_series_length(const hrvnl_series* series) {
  return series ? series->data.values.size() : 0;
}

const char* hrvnl_series_label(const hrvnl_series* series) {
  return series ? series->data.label.c_str() : "";
}

hrvnl_status hrvnl_series_values(const hrvnl_series* series, double* out) {
  if (!series || !out) return bad_argument("hrvnl_series_values");
  std::copy(series->data.values.begin(), series->data.values.end(), out);
  return HRVNL_OK;
}

hrvnl_status hrvnl_series_write(const hrvnl_series* series, const char* path) {
  if (!series || !path) return bad_argument("hrvnl_series_write");
  return guarded([&] {
    std::ofstream stream(path);
    if (!stream) throw hrvnl::IoError(std::string("series_write: cannot open ") + path);
    if (!series->data.label.empty()) stream << "# " << series->data.label << "\n";
    char buf[40];
    for (double v : series->data.values) {
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      stream << buf << "\n";
    }
    return HRVNL_OK;
  });
}

hrvnl_status hrvnl_series_window(const hrvnl_series* series, size_t start, size_t length,
                                 hrvnl_series** out) {
  if (!series || !out) return bad_argument("hrvnl_series_window");
  return guarded([&] {
    hrvnl::RawSeries result;
    result.values = hrvnl::window(series->data.values, start, length);
    result.label = series->data.label;
    *out = wrap(std::move(result));
    return HRVNL_OK;
  });
}

hrvnl_status hrvnl_series_detrend(const hrvnl_series* series, double hp_cutoff,
                                  hrvnl_series** out) {
  if (!series || !out) return bad_argument("hrvnl_series_detrend");
  return guarded([&] {
    hrvnl::RawSeries result;
    result.values = hrvnl::detrend_highpass(series->data.values, hp_cutoff);
    result.label = series->data.label;
    *out = wrap(std::move(result));
    return HRVNL_OK;
  });
}

hrvnl_status hrvnl_series_normalize(const hrvnl_series* series, hrvnl_series** out) {
  if (!series || !out) return bad_argument("hrvnl_series_normalize");
  return guarded([&] {
    hrvnl::RawSeries result;
    result.values = hrvnl::normalize(series->data.values).values;
    result.label = series->data.label;
    *out = wrap(std::move(result));
    return HRVNL_OK;
  });
}

hrvnl_status hrvnl_synth(hrvnl_process_kind kind, size_t n, double phi, double a,
                         double b, hrvnl_static_map transform, uint64_t seed,
                         hrvnl_series** out) {
  if (!out) return bad_argument("hrvnl_synth");
  return guarded([&] {
    hrvnl::ProcessSpec spec;
    switch (kind) {
      case HRVNL_PROCESS_WHITE_GAUSSIAN: spec.kind = hrvnl::ProcessKind::WhiteGaussian; break;
      case HRVNL_PROCESS_AR1: spec.kind = hrvnl::ProcessKind::Ar1; break;
      case HRVNL_PROCESS_STATIC_TRANSFORM:
        spec.kind = hrvnl::ProcessKind::StaticTransform;
        break;
      case HRVNL_PROCESS_BILINEAR: spec.kind = hrvnl::ProcessKind::Bilinear; break;
      default: return bad_argument("hrvnl_synth: kind");
    }
    switch (transform) {
      case HRVNL_MAP_SQUARE: spec.transform = hrvnl::StaticMap::Square; break;
      case HRVNL_MAP_CUBE: spec.transform = hrvnl::StaticMap::Cube; break;
      case HRVNL_MAP_EXP: spec.transform = hrvnl::StaticMap::Exp; break;
      default: return bad_argument("hrvnl_synth: transform");
    }
    spec.n = n;
    spec.phi = phi;
    spec.a = a;
    spec.b = b;
    spec.seed = seed;
    hrvnl::RawSeries series;
    series.values = hrvnl::generate(spec);
    series.label = "synthetic";
    *out = wrap(std::move(series));
    return HRVNL_OK;
  });
}

hrvnl_status hrvnl_sample_entropy(const hrvnl_series* series, const hrvnl_params* params,
                                  double* out) {
  if (!series || !params || !out) return bad_argument("hrvnl_sample_entropy");
  return guarded([&] {
    const auto p = to_params(*params);
    p.validate();
    *out = hrvnl::sample_entropy(hrvnl::normalize(series->data.values), p.m, p.r);
    return HRVNL_OK;
  });
}

hrvnl_status hrvnl_nci(const hrvnl_series* series, const hrvnl_params* params,
                       double* out) {
  if (!series || !params || !out) return bad_argument("hrvnl_nci");
  return guarded([&] {
    *out = hrvnl::nci(series->data.values, to_params(*params));
    return HRVNL_OK;
  });
}

hrvnl_status hrvnl_information_storage(const hrvnl_series* series,
                                       const hrvnl_params* params, double* out) {
  if (!series || !params || !out) return bad_argument("hrvnl_information_storage");
  return guarded([&] {
    const auto p = to_params(*params);
    p.validate();
    *out = hrvnl::information_storage(series->data.values, p.m, p.k);
    return HRVNL_OK;
  });
}

hrvnl_status hrvnl_glc(const hrvnl_series* series, const hrvnl_params* params,
                       const hrvnl_curve* curve, double* out) {
  if (!series || !params || !curve || !out) return bad_argument("hrvnl_glc");
  return guarded([&] {
    const auto p = to_params(*params);
    p.validate();
    *out = hrvnl::glc_index(hrvnl::normalize(series->data.values), p.l_max, curve->data);
    return HRVNL_OK;
  });
}

hrvnl_status hrvnl_calibrate(const hrvnl_series* marginal, const hrvnl_params* params,
                             hrvnl_curve** out) {
  if (!marginal || !params || !out) return bad_argument("hrvnl_calibrate");
  return guarded([&] {
    hrvnl::CalibrationOptions options;
    options.seed = params->seed;
    *out = new hrvnl_curve{hrvnl::calibrate(marginal->data.values, options)};
    return HRVNL_OK;
  });
}

hrvnl_status hrvnl_curve_eval(const hrvnl_curve* curve, double c_g, double* out) {
  if (!curve || !out) return bad_argument("hrvnl_curve_eval");
  return guarded([&] {
    *out = curve->data.eval(c_g);
    return HRVNL_OK;
  });
}

hrvnl_status hrvnl_curve_write(const hrvnl_curve* curve, const char* path) {
  if (!curve || !path) return bad_argument("hrvnl_curve_write");
  return guarded([&] {
    std::ofstream stream(path);
    if (!stream) throw hrvnl::IoError(std::string("curve_write: cannot open ") + path);
    stream << curve->data.to_table();
    return HRVNL_OK;
  });
}

void hrvnl_curve_free(hrvnl_curve* curve) { delete curve; }

hrvnl_status hrvnl_ensemble_create(const hrvnl_series* series, int n_s, int max_iter,
                                   uint64_t seed, hrvnl_ensemble** out) {
  if (!series || !out) return bad_argument("hrvnl_ensemble_create");
  return guarded([&] {
    *out = new hrvnl_ensemble{hrvnl::make_ensemble(series->data.values, n_s, max_iter,
                                                   seed, series->data.label)};
    return HRVNL_OK;
  });
}

size_t hrvnl_ensemble_size(const hrvnl_ensemble* ensemble) {
  return ensemble ? ensemble->data.surrogates.size() : 0;
}

hrvnl_status hrvnl_ensemble_get(const hrvnl_ensemble* ensemble, size_t index,
                                hrvnl_series** out) {
  if (!ensemble || !out) return bad_argument("hrvnl_ensemble_get");
  if (index >= ensemble->data.surrogates.size())
    return fail(HRVNL_ERR_BOUNDS, "ensemble_get: index out of range");
  return guarded([&] {
    hrvnl::RawSeries series;
    series.values = ensemble->data.surrogates[index];
    series.label = "surrogate_" + std::to_string(index);
    *out = wrap(std::move(series));
    return HRVNL_OK;
  });
}

hrvnl_status hrvnl_ensemble_write(const hrvnl_ensemble* ensemble, const char* directory) {
  if (!ensemble || !directory) return bad_argument("hrvnl_ensemble_write");
  return guarded([&] {
    hrvnl::write_ensemble(ensemble->data, directory);
    return HRVNL_OK;
  });
}

void hrvnl_ensemble_free(hrvnl_ensemble* ensemble) { delete ensemble; }

hrvnl_status hrvnl_detect(const hrvnl_series* series, hrvnl_measure measure,
                          const hrvnl_params* params, hrvnl_result** out) {
  if (!series || !params || !out) return bad_argument("hrvnl_detect");
  return guarded([&] {
    hrvnl::Measure m;
    switch (measure) {
      case HRVNL_MEASURE_NCI: m = hrvnl::Measure::NCI; break;
      case HRVNL_MEASURE_IS: m = hrvnl::Measure::IS; break;
      case HRVNL_MEASURE_GLC: m = hrvnl::Measure::GLC; break;
      default: return bad_argument("hrvnl_detect: measure");
    }
    const hrvnl::NormalizedSeries normalized = hrvnl::normalize(series->data.values);
    *out = new hrvnl_result{hrvnl::detect(normalized, m, to_params(*params))};
    return HRVNL_OK;
  });
}

double hrvnl_result_original(const hrvnl_result* result) {
  return result ? result->data.ni_original : 0.0;
}

double hrvnl_result_threshold(const hrvnl_result* result) {
  return result ? result->data.threshold : 0.0;
}

double hrvnl_result_median(const hrvnl_result* result) {
  return result ? result->data.ni_median : 0.0;
}

double hrvnl_result_delta(const hrvnl_result* result) {
  return result ? result->data.delta_ni : 0.0;
}

int hrvnl_result_rejected(const hrvnl_result* result) {
  return result && result->data.rejected ? 1 : 0;
}

uint64_t hrvnl_result_seed(const hrvnl_result* result) {
  return result ? result->data.seed : 0;
}

hrvnl_measure hrvnl_result_measure(const hrvnl_result* result) {
  if (!result) return HRVNL_MEASURE_NCI;
  switch (result->data.measure) {
    case hrvnl::Measure::IS: return HRVNL_MEASURE_IS;
    case hrvnl::Measure::GLC: return HRVNL_MEASURE_GLC;
    default: return HRVNL_MEASURE_NCI;
  }
}

size_t hrvnl_result_surrogate_count(const hrvnl_result* result) {
  return result ? result->data.surrogate_values.size() : 0;
}

hrvnl_status hrvnl_result_surrogate_values(const hrvnl_result* result, double* out) {
  if (!result || !out) return bad_argument("hrvnl_result_surrogate_values");
  std::copy(result->data.surrogate_values.begin(), result->data.surrogate_values.end(),
            out);
  return HRVNL_OK;
}

void hrvnl_result_free(hrvnl_result* result) { delete result; }

hrvnl_status hrvnl_run_subject(const hrvnl_series* series, const hrvnl_params* params,
                               const hrvnl_preproc* preproc, hrvnl_result* out[3]) {
  if (!series || !params || !preproc || !out) return bad_argument("hrvnl_run_subject");
  return guarded([&] {
    const hrvnl::SubjectOutcome outcome =
        hrvnl::run_subject(series->data, to_params(*params), to_preproc(*preproc));
    if (outcome.skipped)
      return fail(HRVNL_ERR_INSUFFICIENT_DATA, outcome.skip_reason);
    for (size_t i = 0; i < 3; ++i)
      out[i] = new hrvnl_result{outcome.results[i]};
    return HRVNL_OK;
  });
}

hrvnl_status hrvnl_cohort_run(const char* manifest_path, const hrvnl_params* params,
                              const hrvnl_preproc* preproc, const char* out_dir) {
  if (!manifest_path || !params || !preproc || !out_dir)
    return bad_argument("hrvnl_cohort_run");
  return guarded([&] {
    const hrvnl::CohortManifest manifest = hrvnl::load_manifest(manifest_path);
    const hrvnl::AnalysisReport report =
        hrvnl::run_cohort(manifest, to_params(*params), to_preproc(*preproc));
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    hrvnl::write_records_csv(report, (dir / "records.csv").string());
    hrvnl::write_summary(report, (dir / "summary.txt").string());
    return HRVNL_OK;
  });
}

}  // extern "C"
