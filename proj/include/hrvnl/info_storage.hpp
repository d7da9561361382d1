#pragma once

#include <vector>

#include "hrvnl/series.hpp"

namespace hrvnl {

// Range-count convention for the digamma terms. With IncludeReference the
// reference point itself is part of each marginal count (so the counts are
// n + 1 with n the strict neighbors), which compensates the estimator bias;
// ExcludeFloor counts strict neighbors only and floors empty counts at 1.
enum class RangeCountMode {
  IncludeReference,
  ExcludeFloor,
};

// Per-reference neighbor-search results in the joint (m+1)-dimensional space
// (maximum norm). epsilon is twice the distance to the k-th nearest neighbor;
// n_history / n_target count points with marginal distance strictly below
// epsilon / 2 (counting per RangeCountMode).
struct KnnQueryResult {
  std::vector<double> epsilon;
  std::vector<std::size_t> n_history;
  std::vector<std::size_t> n_target;
};

KnnQueryResult knn_query(const EmbeddedPatterns& patterns, int k,
                         RangeCountMode mode = RangeCountMode::IncludeReference);

// Nearest-neighbor information storage estimate in nats:
//   psi(N') + psi(k) - <psi(n_history)> - <psi(n_target)>,
// with N' = N - m embedded points. Input is re-normalized internally.
// Exact duplicate joint patterns (epsilon = 0) are resolved by one pass of
// deterministic uniform jitter of amplitude 1e-10 sigma.
double information_storage(const std::vector<double>& values, int m, int k,
                           RangeCountMode mode = RangeCountMode::IncludeReference);

}  // namespace hrvnl
