#pragma once

#include <string>
#include <vector>

namespace hrvnl {

struct GroupSample {
  std::string group_label;
  std::string condition_label;
  std::vector<double> values;
};

struct TestOutcome {
  std::string test_name;
  double statistic = 0.0;
  double p_value = 1.0;
  std::vector<std::size_t> n;  // sample sizes involved
  std::string method;          // "exact" or "approx" branch taken
};

// Kruskal-Wallis H with tie correction; chi-square p with (#groups - 1) df.
TestOutcome kruskal_wallis(const std::vector<GroupSample>& groups);

// Wilcoxon rank-sum (Mann-Whitney U), two-sided. Exact permutation
// enumeration when both samples have <= 10 values, tie-corrected normal
// approximation with continuity correction otherwise.
TestOutcome rank_sum(const GroupSample& a, const GroupSample& b);

// Paired Wilcoxon signed-rank, two-sided. Zero differences are dropped.
// Exact sign-pattern enumeration for n <= 15, normal approximation with
// continuity correction otherwise.
TestOutcome signed_rank(const std::vector<double>& paired_a,
                        const std::vector<double>& paired_b);

// 2x2 chi-square test for proportions, no Yates correction, 1 df.
TestOutcome chi_square_proportions(std::size_t k1, std::size_t n1, std::size_t k2,
                                   std::size_t n2);

// McNemar test on discordant pair counts. Exact binomial two-sided for
// b + c <= 25, continuity-corrected chi-square otherwise.
TestOutcome mcnemar(std::size_t b, std::size_t c);

// Mid-ranks of v (average rank for ties), 1-based.
std::vector<double> midranks(const std::vector<double>& v);

}  // namespace hrvnl
