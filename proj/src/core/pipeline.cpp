#include "hrvnl/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hrvnl/errors.hpp"
#include "hrvnl/rng.hpp"

namespace hrvnl {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

bool parse_double(const std::string& s, double& out) {
  const char* str = s.c_str();
  char* end = nullptr;
  out = std::strtod(str, &end);
  return end != str && *end == '\0' && std::isfinite(out);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

RawSeries ingest_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("ingest: cannot open " + path);
  RawSeries series;
  series.label = std::filesystem::path(path).stem().string();

  std::string line;
  std::size_t line_no = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string payload = trim(line);
    if (payload.empty() || payload[0] == '#') continue;
    double value;
    if (parse_double(payload, value)) {
      series.values.push_back(value);
      header_allowed = false;
    } else if (header_allowed) {
      header_allowed = false;  // single header line
    } else {
      throw ParseError("ingest: non-numeric value at " + path + ":" +
                       std::to_string(line_no));
    }
  }
  if (series.values.empty()) throw ShapeError("ingest: empty input " + path);
  return series;
}

SubjectOutcome run_subject(const RawSeries& series, const AnalysisParams& params,
                           const PreprocessConfig& config) {
  params.validate();
  SubjectOutcome outcome;
  const std::size_t needed =
      std::max(config.min_samples, config.window_start + config.window_len);
  if (series.values.size() < needed) {
    outcome.skipped = true;
    outcome.skip_reason = "insufficient data (" + std::to_string(series.values.size()) +
                          " < " + std::to_string(needed) + ")";
    return outcome;
  }

  std::vector<double> w = window(series.values, config.window_start, config.window_len);
  if (config.detrend) w = detrend_highpass(w, config.hp_cutoff);
  const NormalizedSeries normalized = normalize(w);

  CalibrationOptions cal;
  cal.seed = derive_seed(params.seed, 0xCA11B);
  const CalibrationCurve curve = calibrate(normalized.values, cal);

  outcome.results.push_back(detect(normalized, Measure::NCI, params));
  outcome.results.push_back(detect(normalized, Measure::IS, params));
  outcome.results.push_back(detect(normalized, Measure::GLC, params, &curve));
  return outcome;
}

CohortManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("manifest: cannot open " + path);
  const std::filesystem::path base = std::filesystem::path(path).parent_path();

  CohortManifest manifest;
  std::string line;
  std::size_t line_no = 0;
  std::set<std::pair<std::string, std::string>> seen;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string payload = trim(line);
    if (payload.empty() || payload[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(payload);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!header_seen) {
      if (fields != std::vector<std::string>{"subject_id", "group", "condition", "path"})
        throw ParseError("manifest: expected header subject_id,group,condition,path at " +
                         path + ":" + std::to_string(line_no));
      header_seen = true;
      continue;
    }
    if (fields.size() != 4)
      throw ParseError("manifest: expected 4 fields at " + path + ":" +
                       std::to_string(line_no));
    ManifestRow row{fields[0], fields[1], fields[2], fields[3]};
    if (row.subject_id.empty() || row.group.empty() || row.condition.empty())
      throw ParseError("manifest: empty label at " + path + ":" + std::to_string(line_no));
    if (!seen.insert({row.subject_id, row.condition}).second)
      throw ParseError("manifest: duplicate (subject, condition) at " + path + ":" +
                       std::to_string(line_no));
    std::filesystem::path file(row.path);
    if (file.is_relative()) file = base / file;
    row.path = file.string();
    if (!std::filesystem::exists(row.path))
      throw ParseError("manifest: missing file " + row.path + " at " + path + ":" +
                       std::to_string(line_no));
    manifest.rows.push_back(std::move(row));
  }
  if (!header_seen || manifest.rows.empty())
    throw ShapeError("manifest: empty manifest " + path);
  return manifest;
}

namespace {

const Measure kMeasures[] = {Measure::NCI, Measure::IS, Measure::GLC};

std::vector<std::string> sorted_unique(const std::vector<SubjectResultRecord>& records,
                                       std::string SubjectResultRecord::*field) {
  std::set<std::string> values;
  for (const auto& r : records) values.insert(r.*field);
  return {values.begin(), values.end()};
}

}  // namespace

AnalysisReport run_cohort(const CohortManifest& manifest, const AnalysisParams& params,
                          const PreprocessConfig& config) {
  params.validate();
  if (manifest.rows.empty()) throw ShapeError("run_cohort: empty manifest");

  AnalysisReport report;
  report.params = params;
  report.config = config;

  for (std::size_t i = 0; i < manifest.rows.size(); ++i) {
    const ManifestRow& row = manifest.rows[i];
    AnalysisParams subject_params = params;
    subject_params.seed = derive_seed(params.seed, i);
    try {
      const RawSeries series = ingest_series(row.path);
      const SubjectOutcome outcome = run_subject(series, subject_params, config);
      if (outcome.skipped) {
        report.skips.push_back({row.subject_id, row.condition, outcome.skip_reason});
        continue;
      }
      for (const NonlinearityResult& r : outcome.results) {
        report.records.push_back({row.subject_id, row.group, row.condition, r.measure,
                                  r.ni_original, r.delta_ni, r.rejected, r.seed});
      }
    } catch (const Error& e) {
      report.skips.push_back({row.subject_id, row.condition, e.what()});
      report.warnings.push_back("subject " + row.subject_id + "/" + row.condition +
                                " skipped: " + e.what());
    }
  }

  const std::vector<std::string> groups =
      sorted_unique(report.records, &SubjectResultRecord::group);
  const std::vector<std::string> conditions =
      sorted_unique(report.records, &SubjectResultRecord::condition);

  const auto cell_records = [&](const std::string& group, const std::string& condition,
                                Measure measure) {
    std::vector<const SubjectResultRecord*> out;
    for (const auto& r : report.records)
      if (r.group == group && r.condition == condition && r.measure == measure)
        out.push_back(&r);
    return out;
  };

  // Per-cell summaries.
  for (const auto& group : groups) {
    for (const auto& condition : conditions) {
      for (Measure measure : kMeasures) {
        const auto recs = cell_records(group, condition, measure);
        if (recs.empty()) continue;
        std::vector<double> values;
        std::size_t rejected = 0;
        for (const auto* r : recs) {
          values.push_back(r->value);
          if (r->rejected) ++rejected;
        }
        CellSummary cell;
        cell.group = group;
        cell.condition = condition;
        cell.measure = measure;
        cell.count = values.size();
        cell.median = percentile(values, 50.0);
        cell.p5 = percentile(values, 5.0);
        cell.p95 = percentile(values, 95.0);
        cell.rejection_pct = 100.0 * double(rejected) / double(values.size());
        report.cells.push_back(cell);
      }
    }
  }

  const auto add_test = [&](std::string context, TestOutcome outcome) {
    report.tests.push_back({std::move(context), std::move(outcome)});
  };

  // Across-group battery per (condition, measure).
  for (Measure measure : kMeasures) {
    for (const auto& condition : conditions) {
      std::vector<GroupSample> samples;
      for (const auto& group : groups) {
        GroupSample s{group, condition, {}};
        for (const auto* r : cell_records(group, condition, measure))
          s.values.push_back(r->value);
        if (s.values.size() >= 2) samples.push_back(std::move(s));
      }
      const std::string scope = std::string(measure_name(measure)) + "/" + condition;
      if (samples.size() >= 2) add_test(scope + "/groups", kruskal_wallis(samples));
      for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
          add_test(scope + "/" + samples[i].group_label + "-vs-" + samples[j].group_label,
                   rank_sum(samples[i], samples[j]));
        }
      }
      // Rejection proportions between groups.
      for (std::size_t i = 0; i < groups.size(); ++i) {
        for (std::size_t j = i + 1; j < groups.size(); ++j) {
          const auto ri = cell_records(groups[i], condition, measure);
          const auto rj = cell_records(groups[j], condition, measure);
          if (ri.empty() || rj.empty()) continue;
          const auto count_rejected = [](const auto& recs) {
            std::size_t n = 0;
            for (const auto* r : recs)
              if (r->rejected) ++n;
            return n;
          };
          add_test(scope + "/rejections/" + groups[i] + "-vs-" + groups[j],
                   chi_square_proportions(count_rejected(ri), ri.size(),
                                          count_rejected(rj), rj.size()));
        }
      }
    }
  }

  // Paired condition battery; defined only for the two-condition design.
  if (conditions.size() == 2) {
    const std::string& c0 = conditions[0];
    const std::string& c1 = conditions[1];
    for (Measure measure : kMeasures) {
      for (const auto& group : groups) {
        std::map<std::string, const SubjectResultRecord*> in_c0, in_c1;
        for (const auto* r : cell_records(group, c0, measure)) in_c0[r->subject_id] = r;
        for (const auto* r : cell_records(group, c1, measure)) in_c1[r->subject_id] = r;
        std::vector<double> paired0, paired1;
        std::size_t only0 = 0, only1 = 0;  // discordant rejection counts
        for (const auto& [subject, r0] : in_c0) {
          const auto it = in_c1.find(subject);
          if (it == in_c1.end()) {
            report.warnings.push_back("subject " + subject + " (" + group +
                                      ") missing condition " + c1 +
                                      "; excluded from paired tests");
            continue;
          }
          paired0.push_back(r0->value);
          paired1.push_back(it->second->value);
          if (r0->rejected && !it->second->rejected) ++only0;
          if (!r0->rejected && it->second->rejected) ++only1;
        }
        for (const auto& [subject, r1] : in_c1) {
          if (!in_c0.count(subject))
            report.warnings.push_back("subject " + subject + " (" + group +
                                      ") missing condition " + c0 +
                                      "; excluded from paired tests");
        }
        if (paired0.empty()) continue;
        const std::string scope =
            std::string(measure_name(measure)) + "/" + group + "/" + c0 + "-vs-" + c1;
        try {
          add_test(scope, signed_rank(paired0, paired1));
        } catch (const Error& e) {
          report.warnings.push_back(scope + ": " + e.what());
        }
        add_test(scope + "/rejections", mcnemar(only0, only1));
      }
    }
  }
  return report;
}

void write_records_csv(const AnalysisReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("write_records_csv: cannot open " + path);
  out << "subject,group,condition,measure,value,delta,rejected,seed\n";
  for (const auto& r : report.records) {
    out << r.subject_id << ',' << r.group << ',' << r.condition << ','
        << measure_name(r.measure) << ',' << fmt(r.value) << ',' << fmt(r.delta) << ','
        << (r.rejected ? 1 : 0) << ',' << r.seed << "\n";
  }
}

void write_summary(const AnalysisReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("write_summary: cannot open " + path);
  out << "# hrvnl cohort summary\n";
  out << "rng=" << kRngVersion << "\n";
  out << "params.m=" << report.params.m << "\n";
  out << "params.r=" << fmt(report.params.r) << "\n";
  out << "params.k=" << report.params.k << "\n";
  out << "params.l_max=" << report.params.l_max << "\n";
  out << "params.n_s=" << report.params.n_s << "\n";
  out << "params.alpha=" << fmt(report.params.alpha) << "\n";
  out << "params.seed=" << report.params.seed << "\n";
  out << "params.max_iter=" << report.params.max_iter << "\n";
  out << "config.window_start=" << report.config.window_start << "\n";
  out << "config.window_len=" << report.config.window_len << "\n";
  out << "config.hp_cutoff=" << fmt(report.config.hp_cutoff) << "\n";
  out << "config.detrend=" << (report.config.detrend ? 1 : 0) << "\n";
  out << "config.min_samples=" << report.config.min_samples << "\n";

  out << "\n[skips]\n";
  out << "subject,condition,reason\n";
  for (const auto& s : report.skips)
    out << s.subject_id << ',' << s.condition << ',' << s.reason << "\n";

  out << "\n[cells]\n";
  out << "group,condition,measure,count,median,p5,p95,rejection_pct\n";
  for (const auto& c : report.cells) {
    out << c.group << ',' << c.condition << ',' << measure_name(c.measure) << ','
        << c.count << ',' << fmt(c.median) << ',' << fmt(c.p5) << ',' << fmt(c.p95)
        << ',' << fmt(c.rejection_pct) << "\n";
  }

  out << "\n[tests]\n";
  out << "context,test,statistic,p_value,method,n\n";
  for (const auto& t : report.tests) {
    out << t.context << ',' << t.outcome.test_name << ',' << fmt(t.outcome.statistic)
        << ',' << fmt(t.outcome.p_value) << ',' << t.outcome.method << ',';
    for (std::size_t i = 0; i < t.outcome.n.size(); ++i)
      out << (i ? "|" : "") << t.outcome.n[i];
    out << "\n";
  }

  out << "\n[warnings]\n";
  for (const auto& w : report.warnings) out << w << "\n";
}

}  // namespace hrvnl
