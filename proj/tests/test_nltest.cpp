#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "hrvnl/errors.hpp"
#include "hrvnl/nltest.hpp"
#include "hrvnl/series.hpp"
#include "hrvnl/synth.hpp"

using namespace hrvnl;

TEST_CASE("nearest-rank percentile") {
  std::vector<double> v(100);
  std::iota(v.begin(), v.end(), 1.0);  // 1..100
  CHECK(percentile(v, 5.0) == 5.0);
  CHECK(percentile(v, 95.0) == 95.0);
  CHECK(percentile(v, 50.0) == 50.0);
  CHECK(percentile({3.0, 1.0, 2.0}, 50.0) == 2.0);
  CHECK(percentile({3.0, 1.0, 2.0}, 5.0) == 1.0);
  CHECK_THROWS_AS(percentile({}, 50.0), ShapeError);
  CHECK_THROWS_AS(percentile({1.0}, 0.0), ParameterError);
  CHECK_THROWS_AS(percentile({1.0}, 100.0), ParameterError);
}

TEST_CASE("result assembly: tails, thresholds, and delta signs") {
  std::vector<double> surrogates(100);
  std::iota(surrogates.begin(), surrogates.end(), 1.0);  // median 50, p5 5, p95 95

  SUBCASE("NCI uses the lower tail; nonlinearity lowers the index") {
    const NonlinearityResult r = assemble_result(Measure::NCI, 3.0, surrogates, 0.05, 9);
    CHECK(r.tail == Tail::Lower);
    CHECK(r.threshold == 5.0);
    CHECK(r.ni_median == 50.0);
    CHECK(r.rejected);
    CHECK(r.delta_ni == doctest::Approx(47.0));  // median - original
    const NonlinearityResult keep = assemble_result(Measure::NCI, 5.0, surrogates, 0.05, 9);
    CHECK(!keep.rejected);  // strict inequality at the threshold
  }

  SUBCASE("IS and GLC use the upper tail") {
    for (Measure m : {Measure::IS, Measure::GLC}) {
      const NonlinearityResult r = assemble_result(m, 97.0, surrogates, 0.05, 9);
      CHECK(r.tail == Tail::Upper);
      CHECK(r.threshold == 95.0);
      CHECK(r.rejected);
      CHECK(r.delta_ni == doctest::Approx(47.0));  // original - median
      const NonlinearityResult keep = assemble_result(m, 95.0, surrogates, 0.05, 9);
      CHECK(!keep.rejected);
      const NonlinearityResult low = assemble_result(m, 1.0, surrogates, 0.05, 9);
      CHECK(low.delta_ni == doctest::Approx(-49.0));
    }
  }

  SUBCASE("alpha moves the threshold") {
    const NonlinearityResult r = assemble_result(Measure::IS, 0.0, surrogates, 0.10, 9);
    CHECK(r.threshold == 90.0);
  }
}

TEST_CASE("measure names round-trip") {
  for (Measure m : {Measure::NCI, Measure::IS, Measure::GLC}) {
    CHECK(parse_measure(measure_name(m)) == m);
  }
  CHECK_THROWS_AS(parse_measure("XYZ"), ParameterError);
}

TEST_CASE("detect is deterministic in the master seed") {
  ProcessSpec spec;
  spec.kind = ProcessKind::Ar1;
  spec.phi = 0.5;
  spec.seed = 12;
  const NormalizedSeries s = normalize(generate(spec));
  AnalysisParams params;
  params.n_s = 25;
  params.seed = 77;
  const NonlinearityResult a = detect(s, Measure::NCI, params);
  const NonlinearityResult b = detect(s, Measure::NCI, params);
  CHECK(a.ni_original == b.ni_original);
  CHECK(a.surrogate_values == b.surrogate_values);
  CHECK(a.threshold == b.threshold);
  params.seed = 78;
  const NonlinearityResult c = detect(s, Measure::NCI, params);
  CHECK(a.surrogate_values != c.surrogate_values);
}

TEST_CASE("measures draw distinct surrogate streams from one master seed") {
  ProcessSpec spec;
  spec.kind = ProcessKind::Ar1;
  spec.phi = 0.4;
  spec.seed = 3;
  const NormalizedSeries s = normalize(generate(spec));
  AnalysisParams params;
  params.n_s = 25;
  params.seed = 5;
  const NonlinearityResult nci_r = detect(s, Measure::NCI, params);
  const NonlinearityResult is_r = detect(s, Measure::IS, params);
  CHECK(nci_r.seed != is_r.seed);
}

TEST_CASE("detect produces a full surrogate distribution on a linear series") {
  ProcessSpec spec;
  spec.kind = ProcessKind::Ar1;
  spec.phi = 0.6;
  spec.seed = 44;
  const NormalizedSeries s = normalize(generate(spec));
  AnalysisParams params;
  params.n_s = 30;
  params.seed = 10;
  for (Measure m : {Measure::NCI, Measure::IS, Measure::GLC}) {
    const NonlinearityResult r = detect(s, m, params);
    CHECK(r.surrogate_values.size() == 30);
    CHECK(std::isfinite(r.ni_original));
    CHECK(std::isfinite(r.threshold));
  }
}
