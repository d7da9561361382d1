// Batch CLI over the hrvnl shared-library C API.

#include <cinttypes>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "hrvnl.h"

namespace {

int die(hrvnl_status status) {
  std::fprintf(stderr, "error (%d): %s\n", int(status), hrvnl_last_error());
  return 1;
}

const char* measure_label(hrvnl_measure m) {
  switch (m) {
    case HRVNL_MEASURE_NCI: return "NCI";
    case HRVNL_MEASURE_IS: return "IS";
    case HRVNL_MEASURE_GLC: return "GLC";
  }
  return "?";
}

void print_result(const hrvnl_result* result) {
  std::printf("%s value=%.10g threshold=%.10g median=%.10g delta=%.10g rejected=%d\n",
              measure_label(hrvnl_result_measure(result)),
              hrvnl_result_original(result), hrvnl_result_threshold(result),
              hrvnl_result_median(result), hrvnl_result_delta(result),
              hrvnl_result_rejected(result));
}

void add_param_options(CLI::App* cmd, hrvnl_params* params) {
  cmd->add_option("--m", params->m, "Embedding order");
  cmd->add_option("--r", params->r, "Tolerance (standard deviations)");
  cmd->add_option("--k", params->k, "Neighbor count");
  cmd->add_option("--lmax", params->l_max, "Maximum GLC lag");
  cmd->add_option("--ns", params->n_s, "Surrogate count");
  cmd->add_option("--alpha", params->alpha, "Significance level");
  cmd->add_option("--max-iter", params->max_iter, "Surrogate iteration cap");
  cmd->add_option("--seed", params->seed, "Master RNG seed")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hrvnl: nonlinearity indices for short RR-interval series"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hrvnl_version()));

  hrvnl_params params;
  hrvnl_params_default(&params);
  hrvnl_preproc preproc;
  hrvnl_preproc_default(&preproc);

  // analyze: full single-subject pipeline on one file.
  auto* analyze = app.add_subcommand("analyze", "Run the three tests on one series file");
  std::string analyze_input;
  analyze->add_option("input", analyze_input, "Series file (one value per line)")
      ->required();
  add_param_options(analyze, &params);
  analyze->add_option("--window-start", preproc.window_start, "Window start index");
  analyze->add_option("--window-len", preproc.window_len, "Window length");
  analyze->add_option("--hp-cutoff", preproc.hp_cutoff, "High-pass cutoff (cycles/beat)");
  bool no_detrend = false;
  analyze->add_flag("--no-detrend", no_detrend, "Skip the high-pass detrend");
  analyze->add_option("--min-samples", preproc.min_samples, "Skip threshold");

  // cohort: manifest-driven batch run.
  auto* cohort = app.add_subcommand("cohort", "Run a cohort from a manifest CSV");
  std::string cohort_manifest, cohort_out;
  cohort->add_option("manifest", cohort_manifest, "Manifest CSV")->required();
  cohort->add_option("--out", cohort_out, "Output directory")->required();
  add_param_options(cohort, &params);
  cohort->add_option("--window-start", preproc.window_start, "Window start index");
  cohort->add_option("--window-len", preproc.window_len, "Window length");
  cohort->add_option("--hp-cutoff", preproc.hp_cutoff, "High-pass cutoff (cycles/beat)");
  bool cohort_no_detrend = false;
  cohort->add_flag("--no-detrend", cohort_no_detrend, "Skip the high-pass detrend");
  cohort->add_option("--min-samples", preproc.min_samples, "Skip threshold");

  // surrogate: write an IAAFT ensemble to a directory.
  auto* surrogate = app.add_subcommand("surrogate", "Generate an IAAFT surrogate ensemble");
  std::string surrogate_input, surrogate_out;
  int surrogate_ns = 100, surrogate_max_iter = 1000;
  uint64_t surrogate_seed = 0;
  surrogate->add_option("input", surrogate_input, "Series file")->required();
  surrogate->add_option("--out", surrogate_out, "Output directory")->required();
  surrogate->add_option("--ns", surrogate_ns, "Surrogate count");
  surrogate->add_option("--max-iter", surrogate_max_iter, "Iteration cap");
  surrogate->add_option("--seed", surrogate_seed, "Master RNG seed")->required();

  // synth: write one synthetic realization.
  auto* synth = app.add_subcommand("synth", "Generate a synthetic test series");
  std::string synth_kind, synth_map = "cube", synth_out;
  size_t synth_n = 300;
  double synth_phi = 0.0, synth_a = 0.4, synth_b = 0.4;
  uint64_t synth_seed = 0;
  synth->add_option("kind", synth_kind, "white | ar1 | static | bilinear")->required();
  synth->add_option("--out", synth_out, "Output file")->required();
  synth->add_option("--n", synth_n, "Series length");
  synth->add_option("--phi", synth_phi, "AR1 coefficient");
  synth->add_option("--a", synth_a, "Bilinear linear coefficient");
  synth->add_option("--b", synth_b, "Bilinear coupling coefficient");
  synth->add_option("--map", synth_map, "Static map: square | cube | exp");
  synth->add_option("--seed", synth_seed, "RNG seed")->required();

  // calibrate: write the correlation-transfer table for one series' marginal.
  auto* calibrate = app.add_subcommand("calibrate", "Tabulate the GLC calibration curve");
  std::string calibrate_input, calibrate_out;
  uint64_t calibrate_seed = 0;
  calibrate->add_option("input", calibrate_input, "Series file")->required();
  calibrate->add_option("--out", calibrate_out, "Output table file")->required();
  calibrate->add_option("--seed", calibrate_seed, "RNG seed")->required();

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    preproc.detrend = no_detrend ? 0 : 1;
    hrvnl_series* series = nullptr;
    hrvnl_status status = hrvnl_series_load(analyze_input.c_str(), &series);
    if (status != HRVNL_OK) return die(status);
    hrvnl_result* results[3] = {nullptr, nullptr, nullptr};
    status = hrvnl_run_subject(series, &params, &preproc, results);
    if (status != HRVNL_OK) {
      hrvnl_series_free(series);
      return die(status);
    }
    std::printf("series=%s n=%zu seed=%" PRIu64 "\n", hrvnl_series_label(series),
                hrvnl_series_length(series), params.seed);
    for (auto* result : results) {
      print_result(result);
      hrvnl_result_free(result);
    }
    hrvnl_series_free(series);
    return 0;
  }

  if (cohort->parsed()) {
    preproc.detrend = cohort_no_detrend ? 0 : 1;
    const hrvnl_status status =
        hrvnl_cohort_run(cohort_manifest.c_str(), &params, &preproc, cohort_out.c_str());
    if (status != HRVNL_OK) return die(status);
    std::printf("wrote %s/records.csv and %s/summary.txt\n", cohort_out.c_str(),
                cohort_out.c_str());
    return 0;
  }

  if (surrogate->parsed()) {
    hrvnl_series* series = nullptr;
    hrvnl_status status = hrvnl_series_load(surrogate_input.c_str(), &series);
    if (status != HRVNL_OK) return die(status);
    hrvnl_ensemble* ensemble = nullptr;
    status = hrvnl_ensemble_create(series, surrogate_ns, surrogate_max_iter,
                                   surrogate_seed, &ensemble);
    hrvnl_series_free(series);
    if (status != HRVNL_OK) return die(status);
    status = hrvnl_ensemble_write(ensemble, surrogate_out.c_str());
    const size_t count = hrvnl_ensemble_size(ensemble);
    hrvnl_ensemble_free(ensemble);
    if (status != HRVNL_OK) return die(status);
    std::printf("wrote %zu surrogates to %s\n", count, surrogate_out.c_str());
    return 0;
  }

  if (synth->parsed()) {
    hrvnl_process_kind kind;
    if (synth_kind == "white") kind = HRVNL_PROCESS_WHITE_GAUSSIAN;
    else if (synth_kind == "ar1") kind = HRVNL_PROCESS_AR1;
    else if (synth_kind == "static") kind = HRVNL_PROCESS_STATIC_TRANSFORM;
    else if (synth_kind == "bilinear") kind = HRVNL_PROCESS_BILINEAR;
    else {
      std::fprintf(stderr, "unknown process kind: %s\n", synth_kind.c_str());
      return 1;
    }
    hrvnl_static_map map;
    if (synth_map == "square") map = HRVNL_MAP_SQUARE;
    else if (synth_map == "cube") map = HRVNL_MAP_CUBE;
    else if (synth_map == "exp") map = HRVNL_MAP_EXP;
    else {
      std::fprintf(stderr, "unknown static map: %s\n", synth_map.c_str());
      return 1;
    }
    hrvnl_series* series = nullptr;
    hrvnl_status status = hrvnl_synth(kind, synth_n, synth_phi, synth_a, synth_b, map,
                                      synth_seed, &series);
    if (status != HRVNL_OK) return die(status);
    status = hrvnl_series_write(series, synth_out.c_str());
    hrvnl_series_free(series);
    if (status != HRVNL_OK) return die(status);
    std::printf("wrote %s\n", synth_out.c_str());
    return 0;
  }

  if (calibrate->parsed()) {
    hrvnl_series* series = nullptr;
    hrvnl_status status = hrvnl_series_load(calibrate_input.c_str(), &series);
    if (status != HRVNL_OK) return die(status);
    hrvnl_params cal_params = params;
    cal_params.seed = calibrate_seed;
    hrvnl_curve* curve = nullptr;
    status = hrvnl_calibrate(series, &cal_params, &curve);
    hrvnl_series_free(series);
    if (status != HRVNL_OK) return die(status);
    status = hrvnl_curve_write(curve, calibrate_out.c_str());
    hrvnl_curve_free(curve);
    if (status != HRVNL_OK) return die(status);
    std::printf("wrote %s\n", calibrate_out.c_str());
    return 0;
  }

  return 0;
}
