/* hrvnl: nonlinearity analysis of short stationary time series (RR intervals).
 *
 * C API over the core library: opaque handles, integer status codes, and a
 * thread-local error message retrievable with hrvnl_last_error(). Every
 * function returning hrvnl_status yields HRVNL_OK (0) on success. */

#ifndef HRVNL_H
#define HRVNL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hrvnl_status {
  HRVNL_OK = 0,
  HRVNL_ERR_INVALID_ARGUMENT = 1, /* null handle / bad parameter */
  HRVNL_ERR_DOMAIN = 2,
  HRVNL_ERR_INSUFFICIENT_DATA = 3,
  HRVNL_ERR_BOUNDS = 4,
  HRVNL_ERR_DEGENERATE_INPUT = 5,
  HRVNL_ERR_SHAPE = 6,
  HRVNL_ERR_PARSE = 7,
  HRVNL_ERR_IO = 8,
  HRVNL_ERR_CALIBRATION = 9,
  HRVNL_ERR_EXTRAPOLATION = 10,
  HRVNL_ERR_TEST_INVALID = 11,
  HRVNL_ERR_UNDEFINED_ENTROPY = 12,
  HRVNL_ERR_INTERNAL = 13,
} hrvnl_status;

typedef enum hrvnl_measure {
  HRVNL_MEASURE_NCI = 0,
  HRVNL_MEASURE_IS = 1,
  HRVNL_MEASURE_GLC = 2,
} hrvnl_measure;

typedef enum hrvnl_process_kind {
  HRVNL_PROCESS_WHITE_GAUSSIAN = 0,
  HRVNL_PROCESS_AR1 = 1,
  HRVNL_PROCESS_STATIC_TRANSFORM = 2,
  HRVNL_PROCESS_BILINEAR = 3,
} hrvnl_process_kind;

typedef enum hrvnl_static_map {
  HRVNL_MAP_SQUARE = 0,
  HRVNL_MAP_CUBE = 1,
  HRVNL_MAP_EXP = 2,
} hrvnl_static_map;

/* Estimator parameters; initialize with hrvnl_params_default and set seed. */
typedef struct hrvnl_params {
  int m;          /* embedding order, default 2 */
  double r;       /* tolerance in standard deviations, default 0.2 */
  int k;          /* neighbor count, default 10 */
  int l_max;      /* maximum GLC lag, default 2 */
  int n_s;        /* surrogate count, default 100 */
  double alpha;   /* significance level, default 0.05 */
  uint64_t seed;  /* master seed; no default, always set explicitly */
  int max_iter;   /* IAAFT iteration cap, default 1000 */
} hrvnl_params;

typedef struct hrvnl_preproc {
  size_t window_start; /* default 0 */
  size_t window_len;   /* default 300 */
  double hp_cutoff;    /* high-pass cutoff, cycles/beat, default 0.03 */
  int detrend;         /* nonzero = apply the high-pass detrend, default 1 */
  size_t min_samples;  /* skip threshold, default 300 */
} hrvnl_preproc;

typedef struct hrvnl_series hrvnl_series;
typedef struct hrvnl_curve hrvnl_curve;
typedef struct hrvnl_ensemble hrvnl_ensemble;
typedef struct hrvnl_result hrvnl_result;

/* Message for the last failing call on this thread. */
const char* hrvnl_last_error(void);
const char* hrvnl_version(void);

void hrvnl_params_default(hrvnl_params* params);
void hrvnl_preproc_default(hrvnl_preproc* preproc);

/* ---- series ---- */
hrvnl_status hrvnl_series_create(const double* values, size_t n, const char* label,
                                 hrvnl_series** out);
hrvnl_status hrvnl_series_load(const char* path, hrvnl_series** out);
void hrvnl_series_free(hrvnl_series* series);
size_t hrvnl_series_length(const hrvnl_series* series);
const char* hrvnl_series_label(const hrvnl_series* series);
/* Copies all samples into `out` (capacity hrvnl_series_length). */
hrvnl_status hrvnl_series_values(const hrvnl_series* series, double* out);
hrvnl_status hrvnl_series_write(const hrvnl_series* series, const char* path);

/* ---- preprocessing ---- */
hrvnl_status hrvnl_series_window(const hrvnl_series* series, size_t start, size_t length,
                                 hrvnl_series** out);
hrvnl_status hrvnl_series_detrend(const hrvnl_series* series, double hp_cutoff,
                                  hrvnl_series** out);
hrvnl_status hrvnl_series_normalize(const hrvnl_series* series, hrvnl_series** out);

/* ---- synthetic generators ---- */
hrvnl_status hrvnl_synth(hrvnl_process_kind kind, size_t n, double phi, double a,
                         double b, hrvnl_static_map transform, uint64_t seed,
                         hrvnl_series** out);

/* ---- estimators (input is re-normalized internally) ---- */
hrvnl_status hrvnl_sample_entropy(const hrvnl_series* series, const hrvnl_params* params,
                                  double* out);
hrvnl_status hrvnl_nci(const hrvnl_series* series, const hrvnl_params* params,
                       double* out);
hrvnl_status hrvnl_information_storage(const hrvnl_series* series,
                                       const hrvnl_params* params, double* out);
hrvnl_status hrvnl_glc(const hrvnl_series* series, const hrvnl_params* params,
                       const hrvnl_curve* curve, double* out);

/* ---- GLC calibration ---- */
hrvnl_status hrvnl_calibrate(const hrvnl_series* marginal, const hrvnl_params* params,
                             hrvnl_curve** out);
hrvnl_status hrvnl_curve_eval(const hrvnl_curve* curve, double c_g, double* out);
/* Two-column text table (bin_center, c_value). */
hrvnl_status hrvnl_curve_write(const hrvnl_curve* curve, const char* path);
void hrvnl_curve_free(hrvnl_curve* curve);

/* ---- surrogates ---- */
hrvnl_status hrvnl_ensemble_create(const hrvnl_series* series, int n_s, int max_iter,
                                   uint64_t seed, hrvnl_ensemble** out);
size_t hrvnl_ensemble_size(const hrvnl_ensemble* ensemble);
hrvnl_status hrvnl_ensemble_get(const hrvnl_ensemble* ensemble, size_t index,
                                hrvnl_series** out);
/* Per-surrogate CSV files plus a manifest, written into `directory`. */
hrvnl_status hrvnl_ensemble_write(const hrvnl_ensemble* ensemble, const char* directory);
void hrvnl_ensemble_free(hrvnl_ensemble* ensemble);

/* ---- surrogate-data nonlinearity test ---- */
hrvnl_status hrvnl_detect(const hrvnl_series* series, hrvnl_measure measure,
                          const hrvnl_params* params, hrvnl_result** out);
double hrvnl_result_original(const hrvnl_result* result);
double hrvnl_result_threshold(const hrvnl_result* result);
double hrvnl_result_median(const hrvnl_result* result);
double hrvnl_result_delta(const hrvnl_result* result);
int hrvnl_result_rejected(const hrvnl_result* result);
uint64_t hrvnl_result_seed(const hrvnl_result* result);
hrvnl_measure hrvnl_result_measure(const hrvnl_result* result);
size_t hrvnl_result_surrogate_count(const hrvnl_result* result);
hrvnl_status hrvnl_result_surrogate_values(const hrvnl_result* result, double* out);
void hrvnl_result_free(hrvnl_result* result);

/* ---- batch pipeline ---- */
/* Full single-subject pipeline (window -> detrend -> normalize -> 3 tests).
 * `out` receives three results in measure order NCI, IS, GLC; on skip
 * (insufficient data) returns HRVNL_ERR_INSUFFICIENT_DATA with the reason in
 * hrvnl_last_error(). */
hrvnl_status hrvnl_run_subject(const hrvnl_series* series, const hrvnl_params* params,
                               const hrvnl_preproc* preproc, hrvnl_result* out[3]);

/* Cohort run over a manifest CSV (header subject_id,group,condition,path);
 * writes records.csv and summary.txt into out_dir. */
hrvnl_status hrvnl_cohort_run(const char* manifest_path, const hrvnl_params* params,
                              const hrvnl_preproc* preproc, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* HRVNL_H */
