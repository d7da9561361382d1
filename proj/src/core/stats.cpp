#include "hrvnl/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hrvnl/errors.hpp"
#include "hrvnl/special.hpp"

namespace hrvnl {

std::vector<double> midranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = 0.5 * (double(i + 1) + double(j + 1));
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

namespace {

// Sum of t^3 - t over tie groups of a sorted-by-value sample.
double tie_term(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double acc = 0.0;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    while (j + 1 < values.size() && values[j + 1] == values[i]) ++j;
    const double t = double(j - i + 1);
    acc += t * t * t - t;
    i = j + 1;
  }
  return acc;
}

double two_sided_normal_p(double z_abs) {
  return std::min(1.0, 2.0 * (1.0 - norm_cdf(z_abs)));
}

}  // namespace

TestOutcome kruskal_wallis(const std::vector<GroupSample>& groups) {
  if (groups.size() < 2) throw ShapeError("kruskal_wallis: need at least 2 groups");
  for (const auto& g : groups)
    if (g.values.size() < 2)
      throw ShapeError("kruskal_wallis: every group needs at least 2 values");

  std::vector<double> pooled;
  for (const auto& g : groups) pooled.insert(pooled.end(), g.values.begin(), g.values.end());
  const std::size_t n = pooled.size();

  TestOutcome out;
  out.test_name = "kruskal_wallis";
  for (const auto& g : groups) out.n.push_back(g.values.size());

  const double ties = tie_term(pooled);
  const double nn = double(n);
  const double correction = 1.0 - ties / (nn * nn * nn - nn);
  if (correction <= 0.0) {  // every value identical
    out.statistic = 0.0;
    out.p_value = 1.0;
    out.method = "degenerate";
    return out;
  }

  const std::vector<double> ranks = midranks(pooled);
  double h = 0.0;
  std::size_t offset = 0;
  for (const auto& g : groups) {
    double rank_sum_g = 0.0;
    for (std::size_t i = 0; i < g.values.size(); ++i) rank_sum_g += ranks[offset + i];
    h += rank_sum_g * rank_sum_g / double(g.values.size());
    offset += g.values.size();
  }
  h = 12.0 / (nn * (nn + 1.0)) * h - 3.0 * (nn + 1.0);
  h /= correction;

  out.statistic = h;
  out.p_value = chi2_sf(h, double(groups.size() - 1));
  out.method = "chi2-approx";
  return out;
}

namespace {

// Exact permutation tail of the rank-sum statistic: over all C(n, na) subsets
// of the pooled mid-ranks, count those at least as far from the mean rank sum
// as the observed one.
void rank_sum_enumerate(const std::vector<double>& ranks, std::size_t na,
                        std::size_t start, double partial, std::size_t chosen,
                        double mu, double dist_obs, std::size_t& extreme,
                        std::size_t& total) {
  if (chosen == na) {
    ++total;
    if (std::fabs(partial - mu) >= dist_obs - 1e-9) ++extreme;
    return;
  }
  if (ranks.size() - start < na - chosen) return;
  for (std::size_t i = start; i < ranks.size(); ++i)
    rank_sum_enumerate(ranks, na, i + 1, partial + ranks[i], chosen + 1, mu, dist_obs,
                       extreme, total);
}

}  // namespace

TestOutcome rank_sum(const GroupSample& a, const GroupSample& b) {
  if (a.values.size() < 2 || b.values.size() < 2)
    throw ShapeError("rank_sum: each sample needs at least 2 values");
  const std::size_t na = a.values.size();
  const std::size_t nb = b.values.size();
  const std::size_t n = na + nb;

  std::vector<double> pooled = a.values;
  pooled.insert(pooled.end(), b.values.begin(), b.values.end());
  const std::vector<double> ranks = midranks(pooled);

  double w = 0.0;
  for (std::size_t i = 0; i < na; ++i) w += ranks[i];
  const double u = w - double(na) * double(na + 1) / 2.0;

  TestOutcome out;
  out.test_name = "rank_sum";
  out.statistic = u;
  out.n = {na, nb};

  const double mu_w = double(na) * double(n + 1) / 2.0;
  if (na <= 10 && nb <= 10) {
    std::size_t extreme = 0, total = 0;
    rank_sum_enumerate(ranks, na, 0, 0.0, 0, mu_w, std::fabs(w - mu_w), extreme, total);
    out.p_value = double(extreme) / double(total);
    out.method = "exact";
  } else {
    const double ties = tie_term(pooled);
    const double nn = double(n);
    const double var =
        double(na) * double(nb) / 12.0 * ((nn + 1.0) - ties / (nn * (nn - 1.0)));
    if (var <= 0.0) {
      out.p_value = 1.0;
      out.method = "degenerate";
    } else {
      const double z = std::max(0.0, std::fabs(w - mu_w) - 0.5) / std::sqrt(var);
      out.p_value = two_sided_normal_p(z);
      out.method = "normal-approx";
    }
  }
  return out;
}

TestOutcome signed_rank(const std::vector<double>& paired_a,
                        const std::vector<double>& paired_b) {
  if (paired_a.size() != paired_b.size()) throw ShapeError("signed_rank: length mismatch");

  std::vector<double> diffs;
  for (std::size_t i = 0; i < paired_a.size(); ++i) {
    const double d = paired_a[i] - paired_b[i];
    if (d != 0.0) diffs.push_back(d);
  }

  TestOutcome out;
  out.test_name = "signed_rank";
  out.n = {diffs.size()};
  if (diffs.empty()) {
    out.statistic = 0.0;
    out.p_value = 1.0;
    out.method = "degenerate";
    return out;
  }
  const std::size_t n = diffs.size();
  if (n < 5)
    throw InsufficientDataError("signed_rank: need >= 5 non-zero differences");

  std::vector<double> abs_diffs(n);
  for (std::size_t i = 0; i < n; ++i) abs_diffs[i] = std::fabs(diffs[i]);
  const std::vector<double> ranks = midranks(abs_diffs);

  double w = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (diffs[i] > 0.0) w += ranks[i];
  out.statistic = w;

  const double mu = double(n) * double(n + 1) / 4.0;
  if (n <= 15) {
    const double dist_obs = std::fabs(w - mu);
    std::size_t extreme = 0;
    const std::size_t masks = std::size_t(1) << n;
    for (std::size_t mask = 0; mask < masks; ++mask) {
      double wp = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t(1) << i)) wp += ranks[i];
      if (std::fabs(wp - mu) >= dist_obs - 1e-9) ++extreme;
    }
    out.p_value = double(extreme) / double(masks);
    out.method = "exact";
  } else {
    const double ties = tie_term(abs_diffs);
    const double nn = double(n);
    const double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0 - ties / 48.0;
    if (var <= 0.0) {
      out.p_value = 1.0;
      out.method = "degenerate";
    } else {
      const double z = std::max(0.0, std::fabs(w - mu) - 0.5) / std::sqrt(var);
      out.p_value = two_sided_normal_p(z);
      out.method = "normal-approx";
    }
  }
  return out;
}

TestOutcome chi_square_proportions(std::size_t k1, std::size_t n1, std::size_t k2,
                                   std::size_t n2) {
  if (n1 < 1 || n2 < 1) throw ParameterError("chi_square_proportions: trials must be >= 1");
  if (k1 > n1 || k2 > n2)
    throw ParameterError("chi_square_proportions: successes exceed trials");

  const double a = double(k1), b = double(n1 - k1);
  const double c = double(k2), d = double(n2 - k2);
  const double n = a + b + c + d;

  TestOutcome out;
  out.test_name = "chi_square_proportions";
  out.n = {n1, n2};
  const double denom = (a + b) * (c + d) * (a + c) * (b + d);
  if (denom == 0.0) {  // a zero margin
    out.statistic = 0.0;
    out.p_value = 1.0;
    out.method = "degenerate";
    return out;
  }
  out.statistic = n * (a * d - b * c) * (a * d - b * c) / denom;
  out.p_value = chi2_sf(out.statistic, 1.0);
  out.method = "chi2";
  return out;
}

TestOutcome mcnemar(std::size_t b, std::size_t c) {
  const std::size_t n = b + c;
  TestOutcome out;
  out.test_name = "mcnemar";
  out.n = {b, c};
  if (n == 0) {
    out.statistic = 0.0;
    out.p_value = 1.0;
    out.method = "degenerate";
    return out;
  }
  if (n <= 25) {
    // Symmetric two-sided binomial tail around n/2.
    const double dist_obs = std::fabs(2.0 * double(b) - double(n));
    double p = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (std::fabs(2.0 * double(i) - double(n)) >= dist_obs - 1e-9)
        p += std::exp(log_choose(n, i) - double(n) * std::log(2.0));
    }
    out.statistic = double(std::min(b, c));
    out.p_value = std::min(1.0, p);
    out.method = "exact";
  } else {
    const double diff = std::fabs(double(b) - double(c)) - 1.0;
    out.statistic = diff * diff / double(n);
    out.p_value = chi2_sf(out.statistic, 1.0);
    out.method = "chi2-cc";
  }
  return out;
}

}  // namespace hrvnl
