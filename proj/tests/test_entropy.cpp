#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "hrvnl/entropy.hpp"
#include "hrvnl/errors.hpp"
#include "hrvnl/rng.hpp"
#include "hrvnl/series.hpp"

using namespace hrvnl;

namespace {

// Independent O(N^2) counting oracle over explicit pattern vectors.
struct BruteCounts {
  std::vector<std::size_t> hist, joint;
};

BruteCounts brute_counts(const std::vector<double>& x, int m, double r, PatternNorm norm) {
  const std::size_t n = x.size();
  const std::size_t count = n - std::size_t(m);
  BruteCounts out;
  out.hist.assign(count, 0);
  out.joint.assign(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j) continue;
      bool hist_close, joint_close;
      if (norm == PatternNorm::Euclidean) {
        double dh = 0.0;
        for (int t = 0; t < m; ++t) {
          const double d = x[i + std::size_t(t)] - x[j + std::size_t(t)];
          dh += d * d;
        }
        const double dt = x[i + std::size_t(m)] - x[j + std::size_t(m)];
        hist_close = dh <= r * r;
        joint_close = dh + dt * dt <= r * r;
      } else {
        double dh = 0.0;
        for (int t = 0; t < m; ++t)
          dh = std::max(dh, std::abs(x[i + std::size_t(t)] - x[j + std::size_t(t)]));
        const double dt = std::abs(x[i + std::size_t(m)] - x[j + std::size_t(m)]);
        hist_close = dh <= r;
        joint_close = std::max(dh, dt) <= r;
      }
      if (hist_close) ++out.hist[i];
      if (joint_close) ++out.joint[i];
    }
  }
  return out;
}

double brute_sampen(const std::vector<double>& x, int m, double r, PatternNorm norm) {
  const BruteCounts c = brute_counts(x, m, r, norm);
  double a = 0.0, b = 0.0;
  for (std::size_t i = 0; i < c.hist.size(); ++i) {
    a += double(c.joint[i]);
    b += double(c.hist[i]);
  }
  return -std::log(a) + std::log(b);
}

double brute_lsampen(const std::vector<double>& x, int m, double r, PatternNorm norm) {
  const BruteCounts c = brute_counts(x, m, r, norm);
  const double floor_p = 1.0 / double(x.size() - std::size_t(m) + 1);
  double mean_p = 0.0;
  for (std::size_t i = 0; i < c.hist.size(); ++i) {
    mean_p += c.hist[i] == 0 ? floor_p : double(c.joint[i]) / double(c.hist[i]);
  }
  return -std::log(mean_p / double(c.hist.size()));
}

std::vector<double> gaussian_series(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.gaussian();
  return v;
}

}  // namespace

TEST_CASE("neighborhood counts match the brute-force oracle") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const NormalizedSeries s = normalize(gaussian_series(seed, 120));
    for (PatternNorm norm : {PatternNorm::Euclidean, PatternNorm::Chebyshev}) {
      const NeighborhoodCounts fast = neighborhood_counts(s, 2, 0.2, norm);
      const BruteCounts brute = brute_counts(s.values, 2, 0.2, norm);
      REQUIRE(fast.history_matches.size() == brute.hist.size());
      for (std::size_t i = 0; i < brute.hist.size(); ++i) {
        CHECK(fast.history_matches[i] == brute.hist[i]);
        CHECK(fast.joint_matches[i] == brute.joint[i]);
        CHECK(fast.joint_matches[i] <= fast.history_matches[i]);
      }
    }
  }
}

TEST_CASE("sample entropy matches the brute-force oracle to 1e-12") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const NormalizedSeries s = normalize(gaussian_series(100 + seed, 300));
    for (PatternNorm norm : {PatternNorm::Euclidean, PatternNorm::Chebyshev}) {
      CHECK(sample_entropy(s, 2, 0.2, norm) ==
            doctest::Approx(brute_sampen(s.values, 2, 0.2, norm)).epsilon(1e-12));
    }
  }
}

TEST_CASE("local sample entropy matches the brute-force oracle to 1e-12") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const NormalizedSeries s = normalize(gaussian_series(200 + seed, 300));
    CHECK(local_sample_entropy(s, 2, 0.2) ==
          doctest::Approx(brute_lsampen(s.values, 2, 0.2, PatternNorm::Euclidean))
              .epsilon(1e-12));
  }
}

TEST_CASE("nci normalizes its input: scale and offset invariant") {
  const std::vector<double> base = gaussian_series(7, 300);
  std::vector<double> scaled(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) scaled[i] = 900.0 + 40.0 * base[i];
  AnalysisParams params;
  CHECK(nci(base, params) == doctest::Approx(nci(scaled, params)).epsilon(1e-12));
}

TEST_CASE("isolated reference histories use the maximum-uncertainty probability") {
  // A strictly geometric series: every history is isolated at r = 0.2 after
  // normalization concentrates all but a few values near the minimum.
  std::vector<double> v;
  double x = 1.0;
  for (int i = 0; i < 40; ++i) {
    v.push_back(x);
    x *= 1.6;
  }
  const NormalizedSeries s = normalize(v);
  const NeighborhoodCounts c = neighborhood_counts(s, 2, 0.2);
  std::size_t isolated = 0;
  for (std::size_t h : c.history_matches)
    if (h == 0) ++isolated;
  REQUIRE(isolated > 0);
  CHECK(local_sample_entropy(s, 2, 0.2) ==
        doctest::Approx(brute_lsampen(s.values, 2, 0.2, PatternNorm::Euclidean))
            .epsilon(1e-12));
}

TEST_CASE("global sample entropy is undefined without any joint match") {
  std::vector<double> v;
  double x = 1.0;
  for (int i = 0; i < 25; ++i) {
    v.push_back(x);
    x *= -2.1;
  }
  const NormalizedSeries s = normalize(v);
  CHECK_THROWS_AS(sample_entropy(s, 2, 1e-6), UndefinedEntropyError);
  // The local variant stays defined through the singleton correction.
  CHECK(std::isfinite(local_sample_entropy(s, 2, 1e-6)));
}

TEST_CASE("match counts grow monotonically in the tolerance") {
  const NormalizedSeries s = normalize(gaussian_series(42, 200));
  std::vector<std::size_t> prev_hist, prev_joint;
  for (double r : {0.1, 0.2, 0.4, 0.8}) {
    const NeighborhoodCounts c = neighborhood_counts(s, 2, r);
    if (!prev_hist.empty()) {
      for (std::size_t i = 0; i < c.history_matches.size(); ++i) {
        CHECK(c.history_matches[i] >= prev_hist[i]);
        CHECK(c.joint_matches[i] >= prev_joint[i]);
      }
    }
    prev_hist = c.history_matches;
    prev_joint = c.joint_matches;
  }
}

TEST_CASE("entropy decreases from white noise to a strongly regular signal") {
  const NormalizedSeries noise = normalize(gaussian_series(5, 300));
  std::vector<double> regular(300);
  Rng rng(6);
  for (std::size_t i = 0; i < regular.size(); ++i)
    regular[i] = std::sin(2.0 * M_PI * double(i) / 25.0) + 0.05 * rng.gaussian();
  const NormalizedSeries sine = normalize(regular);
  CHECK(local_sample_entropy(sine, 2, 0.2) < local_sample_entropy(noise, 2, 0.2));
}
