#include "hrvnl/info_storage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hrvnl/errors.hpp"
#include "hrvnl/rng.hpp"
#include "hrvnl/special.hpp"

namespace hrvnl {

namespace {

inline double max_norm(const double* a, const double* b, std::size_t m) {
  double acc = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    double d = std::fabs(a[j] - b[j]);
    if (d > acc) acc = d;
  }
  return acc;
}

}  // namespace

KnnQueryResult knn_query(const EmbeddedPatterns& patterns, int k, RangeCountMode mode) {
  const std::size_t count = patterns.count;
  if (count <= std::size_t(k)) throw InsufficientDataError("knn_query: need more points than k");

  KnnQueryResult out;
  out.epsilon.resize(count);
  out.n_history.resize(count);
  out.n_target.resize(count);

  std::vector<double> joint(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double* hi = patterns.history(i);
    for (std::size_t j = 0; j < count; ++j) {
      if (j == i) continue;
      const double dh = max_norm(hi, patterns.history(j), patterns.m);
      const double dt = std::fabs(patterns.targets[i] - patterns.targets[j]);
      joint[j] = std::max(dh, dt);
    }
    joint[i] = std::numeric_limits<double>::infinity();
    std::vector<double> tmp = joint;
    std::nth_element(tmp.begin(), tmp.begin() + (k - 1), tmp.end());
    const double eps = 2.0 * tmp[std::size_t(k - 1)];
    out.epsilon[i] = eps;

    std::size_t nh = 0, nt = 0;
    const double half = eps / 2.0;
    for (std::size_t j = 0; j < count; ++j) {
      if (j == i) continue;
      if (max_norm(hi, patterns.history(j), patterns.m) < half) ++nh;
      if (std::fabs(patterns.targets[i] - patterns.targets[j]) < half) ++nt;
    }
    if (mode == RangeCountMode::IncludeReference) {
      out.n_history[i] = nh + 1;
      out.n_target[i] = nt + 1;
    } else {
      out.n_history[i] = std::max<std::size_t>(nh, 1);
      out.n_target[i] = std::max<std::size_t>(nt, 1);
    }
  }
  return out;
}

double information_storage(const std::vector<double>& values, int m, int k,
                           RangeCountMode mode) {
  if (k < 1) throw ParameterError("information_storage: k must be >= 1");
  NormalizedSeries series = normalize(values);
  const std::size_t n = series.size();
  if (n <= std::size_t(m) + std::size_t(k))
    throw InsufficientDataError("information_storage: N - m must exceed k");

  EmbeddedPatterns patterns = embed(series, m);
  KnnQueryResult query = knn_query(patterns, k, mode);

  // RR intervals are quantized at 1 ms, so exact duplicate joint patterns can
  // occur; break the ties once with a deterministic jitter and redo the search.
  bool degenerate = false;
  for (double eps : query.epsilon)
    if (!(eps > 0.0)) degenerate = true;
  if (degenerate) {
    Rng jitter(derive_seed(0x6A177E5EEDULL, n));
    for (double& v : series.values) v += 1e-10 * (2.0 * jitter.uniform() - 1.0);
    patterns = embed(series, m);
    query = knn_query(patterns, k, mode);
  }

  const std::size_t count = patterns.count;
  double sum_h = 0.0, sum_t = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    sum_h += digamma(double(query.n_history[i]));
    sum_t += digamma(double(query.n_target[i]));
  }
  return digamma(double(count)) + digamma(double(k)) - sum_h / double(count) -
         sum_t / double(count);
}

}  // namespace hrvnl
