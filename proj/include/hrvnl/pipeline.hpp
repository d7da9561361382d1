#pragma once

#include <string>
#include <vector>

#include "hrvnl/nltest.hpp"
#include "hrvnl/series.hpp"
#include "hrvnl/stats.hpp"

namespace hrvnl {

struct PreprocessConfig {
  std::size_t window_start = 0;
  std::size_t window_len = 300;
  double hp_cutoff = 0.03;  // cycles per beat
  bool detrend = true;
  std::size_t min_samples = 300;
};

// One RR value (milliseconds) per line; '#' comments and an optional single
// header line are allowed. Throws ParseError with the offending line number.
RawSeries ingest_series(const std::string& path);

struct SubjectOutcome {
  bool skipped = false;
  std::string skip_reason;
  std::vector<NonlinearityResult> results;  // NCI, IS, GLC
};

// window -> detrend -> normalize -> {NCI, IS, GLC} detection. The GLC
// calibration curve is computed once from this subject's marginal.
SubjectOutcome run_subject(const RawSeries& series, const AnalysisParams& params,
                           const PreprocessConfig& config);

struct ManifestRow {
  std::string subject_id;
  std::string group;
  std::string condition;
  std::string path;  // resolved against the manifest's directory
};

struct CohortManifest {
  std::vector<ManifestRow> rows;
};

// Header-bearing CSV `subject_id,group,condition,path`. (subject, condition)
// pairs must be unique and every referenced file must exist.
CohortManifest load_manifest(const std::string& path);

struct SubjectResultRecord {
  std::string subject_id;
  std::string group;
  std::string condition;
  Measure measure = Measure::NCI;
  double value = 0.0;
  double delta = 0.0;
  bool rejected = false;
  std::uint64_t seed = 0;
};

struct SkipRecord {
  std::string subject_id;
  std::string condition;
  std::string reason;
};

struct CellSummary {
  std::string group;
  std::string condition;
  Measure measure = Measure::NCI;
  std::size_t count = 0;
  double median = 0.0;
  double p5 = 0.0;
  double p95 = 0.0;
  double rejection_pct = 0.0;
};

struct LabeledTest {
  std::string context;  // measure/condition/group scope of the test
  TestOutcome outcome;
};

struct AnalysisReport {
  AnalysisParams params;
  PreprocessConfig config;
  std::vector<SubjectResultRecord> records;
  std::vector<SkipRecord> skips;
  std::vector<CellSummary> cells;
  std::vector<LabeledTest> tests;
  std::vector<std::string> warnings;
};

// Per-subject runs followed by the full cohort battery: Kruskal-Wallis across
// groups per (condition, measure), pairwise rank-sum, paired signed-rank
// between the two conditions per group, chi-square on rejection proportions
// between groups, and McNemar on paired rejection flags.
AnalysisReport run_cohort(const CohortManifest& manifest, const AnalysisParams& params,
                          const PreprocessConfig& config);

// Long-format CSV: subject,group,condition,measure,value,delta,rejected,seed.
void write_records_csv(const AnalysisReport& report, const std::string& path);

// Parameter echo, per-cell summaries (median and 5th/50th/95th percentiles,
// rejection percentages) and cohort test outcomes as flat key-value records.
void write_summary(const AnalysisReport& report, const std::string& path);

}  // namespace hrvnl
