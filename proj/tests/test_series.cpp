#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "hrvnl/errors.hpp"
#include "hrvnl/rng.hpp"
#include "hrvnl/series.hpp"

using namespace hrvnl;

namespace {

double variance(const std::vector<double>& v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / double(v.size());
  double s = 0.0;
  for (double x : v) s += (x - mean) * (x - mean);
  return s / double(v.size() - 1);
}

}  // namespace

TEST_CASE("moments") {
  const Moments m = moments({1.0, 2.0, 3.0, 4.0});
  CHECK(m.mean == doctest::Approx(2.5));
  CHECK(m.stddev == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-14));
}

TEST_CASE("normalize produces zero mean, unit sample stddev, preserved order") {
  Rng rng(11);
  std::vector<double> v(200);
  for (auto& x : v) x = 800.0 + 50.0 * rng.gaussian();
  const NormalizedSeries n = normalize(v);
  REQUIRE(n.size() == v.size());
  const Moments m = moments(n.values);
  CHECK(std::abs(m.mean) < 1e-13);
  CHECK(m.stddev == doctest::Approx(1.0).epsilon(1e-13));
  // Order statistics are preserved: normalization is affine increasing.
  for (std::size_t i = 1; i < v.size(); ++i) {
    CHECK(((v[i] > v[i - 1]) == (n.values[i] > n.values[i - 1])));
  }
}

TEST_CASE("normalize rejects degenerate input") {
  CHECK_THROWS_AS(normalize(std::vector<double>{5.0, 5.0, 5.0}), DegenerateInputError);
  CHECK_THROWS_AS(normalize(std::vector<double>{5.0}), InsufficientDataError);
}

TEST_CASE("window slicing") {
  const std::vector<double> v{0, 1, 2, 3, 4, 5};
  CHECK(window(v, 2, 3) == std::vector<double>{2, 3, 4});
  CHECK(window(v, 0, 6) == v);
  CHECK_THROWS_AS(window(v, 4, 3), BoundsError);
  CHECK(window(v, 6, 0).empty());
}

TEST_CASE("embed alignment, most-recent-first histories") {
  NormalizedSeries s;
  s.values = {10, 20, 30, 40, 50};
  const EmbeddedPatterns p = embed(s, 2);
  REQUIRE(p.count == 3);
  REQUIRE(p.m == 2);
  // Target 30 has history (20, 10) with the immediate predecessor first.
  CHECK(p.targets[0] == 30);
  CHECK(p.history(0)[0] == 20);
  CHECK(p.history(0)[1] == 10);
  CHECK(p.targets[2] == 50);
  CHECK(p.history(2)[0] == 40);
  CHECK(p.history(2)[1] == 30);
  s.values = {1, 2};
  CHECK_THROWS_AS(embed(s, 2), InsufficientDataError);
}

TEST_CASE("detrend removes constants and slow trends") {
  // Constant input maps to (numerically) zero.
  std::vector<double> constant(300, 7.5);
  const std::vector<double> flat = detrend_highpass(constant, 0.03);
  for (double x : flat) CHECK(std::abs(x) < 1e-9);

  // A slow linear ramp is attenuated to a small residual.
  std::vector<double> ramp(300);
  for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = double(i);
  const std::vector<double> detrended = detrend_highpass(ramp, 0.03);
  CHECK(variance(detrended) < 0.05 * variance(ramp));
}

TEST_CASE("detrend is offset invariant and mean free") {
  Rng rng(3);
  std::vector<double> v(300), shifted(300);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = rng.gaussian();
    shifted[i] = v[i] + 1000.0;
  }
  const std::vector<double> a = detrend_highpass(v, 0.03);
  const std::vector<double> b = detrend_highpass(shifted, 0.03);
  double mean = std::accumulate(a.begin(), a.end(), 0.0) / double(a.size());
  CHECK(std::abs(mean) < 1e-10);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-7));
}

TEST_CASE("detrend keeps at least 90% of white-noise variance") {
  // Averaged over realizations; the passband covers nearly the whole spectrum.
  Rng rng(17);
  double kept = 0.0;
  const int reps = 20;
  for (int rep = 0; rep < reps; ++rep) {
    std::vector<double> v(300);
    for (auto& x : v) x = rng.gaussian();
    kept += variance(detrend_highpass(v, 0.03)) / variance(v);
  }
  kept /= reps;
  CHECK(kept > 0.90);
  CHECK(kept < 1.02);
}

TEST_CASE("detrend validates the cutoff") {
  std::vector<double> v(100, 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = double(i % 7);
  CHECK_THROWS_AS(detrend_highpass(v, 0.0), ParameterError);
  CHECK_THROWS_AS(detrend_highpass(v, 0.5), ParameterError);
}

TEST_CASE("params validation") {
  AnalysisParams p;
  CHECK_NOTHROW(p.validate());
  p.m = 0;
  CHECK_THROWS_AS(p.validate(), ParameterError);
  p = {};
  p.r = -1.0;
  CHECK_THROWS_AS(p.validate(), ParameterError);
  p = {};
  p.alpha = 0.6;
  CHECK_THROWS_AS(p.validate(), ParameterError);
  p = {};
  p.n_s = 0;
  CHECK_THROWS_AS(p.validate(), ParameterError);
}
