#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "hrvnl/errors.hpp"
#include "hrvnl/glc.hpp"
#include "hrvnl/series.hpp"
#include "hrvnl/synth.hpp"

using namespace hrvnl;

TEST_CASE("generated series are standardized") {
  for (ProcessKind kind : {ProcessKind::WhiteGaussian, ProcessKind::Ar1,
                           ProcessKind::StaticTransform, ProcessKind::Bilinear}) {
    ProcessSpec spec;
    spec.kind = kind;
    spec.phi = 0.5;
    spec.seed = 10;
    const std::vector<double> v = generate(spec);
    REQUIRE(v.size() == 300);
    const Moments m = moments(v);
    CHECK(std::abs(m.mean) < 1e-12);
    CHECK(m.stddev == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("determinism and seed sensitivity") {
  ProcessSpec spec;
  spec.kind = ProcessKind::Ar1;
  spec.phi = 0.4;
  spec.seed = 5;
  const std::vector<double> a = generate(spec);
  const std::vector<double> b = generate(spec);
  CHECK(a == b);
  spec.seed = 6;
  CHECK(generate(spec) != a);
}

TEST_CASE("ar1 autocorrelation tracks phi") {
  ProcessSpec spec;
  spec.kind = ProcessKind::Ar1;
  spec.phi = 0.7;
  spec.n = 20000;
  spec.seed = 3;
  const NormalizedSeries s = normalize(generate(spec));
  const AutocorrProfile prof = autocorrelation(s, 2);
  CHECK(prof.at(1) == doctest::Approx(0.7).epsilon(0.03));
  CHECK(prof.at(2) == doctest::Approx(0.49).epsilon(0.06));
}

TEST_CASE("white noise has negligible autocorrelation") {
  ProcessSpec spec;
  spec.kind = ProcessKind::WhiteGaussian;
  spec.n = 20000;
  spec.seed = 8;
  const NormalizedSeries s = normalize(generate(spec));
  CHECK(std::abs(autocorrelation(s, 1).at(1)) < 0.03);
}

TEST_CASE("static transform preserves the base rank order for monotone maps") {
  ProcessSpec base;
  base.kind = ProcessKind::Ar1;
  base.phi = 0.5;
  base.seed = 21;
  const std::vector<double> linear = generate(base);

  ProcessSpec cubed = base;
  cubed.kind = ProcessKind::StaticTransform;
  cubed.transform = StaticMap::Cube;
  const std::vector<double> transformed = generate(cubed);

  REQUIRE(linear.size() == transformed.size());
  for (std::size_t i = 1; i < linear.size(); ++i) {
    CHECK(((linear[i] > linear[i - 1]) == (transformed[i] > transformed[i - 1])));
  }
}

TEST_CASE("bilinear process is stable and depends on the coupling") {
  ProcessSpec spec;
  spec.kind = ProcessKind::Bilinear;
  spec.seed = 30;
  const std::vector<double> v = generate(spec);
  for (double x : v) CHECK(std::isfinite(x));

  ProcessSpec uncoupled = spec;
  uncoupled.b = 0.0;
  CHECK(generate(uncoupled) != v);

  ProcessSpec unstable = spec;
  unstable.a = 1.5;
  CHECK_THROWS_AS(generate(unstable), ParameterError);
}

TEST_CASE("short series are rejected") {
  ProcessSpec spec;
  spec.n = 10;
  CHECK_THROWS_AS(generate(spec), ParameterError);
}

TEST_CASE("name parsing") {
  CHECK(parse_process_kind("ar1") == ProcessKind::Ar1);
  CHECK(parse_process_kind("white") == ProcessKind::WhiteGaussian);
  CHECK(parse_process_kind("bilinear") == ProcessKind::Bilinear);
  CHECK(parse_static_map("cube") == StaticMap::Cube);
  CHECK_THROWS_AS(parse_process_kind("pink"), ParameterError);
  CHECK_THROWS_AS(parse_static_map("log"), ParameterError);
}
