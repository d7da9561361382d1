#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hrvnl {

// Fourier-transform surrogate: amplitudes preserved, phases randomized
// (conjugate-symmetric; DC and Nyquist untouched so the output stays real).
std::vector<double> ft_surrogate(const std::vector<double>& values, std::uint64_t seed);

struct IaaftResult {
  std::vector<double> values;
  int iterations_used = 0;
  bool converged = false;
};

// Iteratively refined amplitude-adjusted FT surrogate. Alternates spectrum
// adjustment (original amplitudes, candidate phases) and amplitude adjustment
// (rank remap onto the original multiset) until the rank ordering reaches a
// fixed point or max_iter. The returned series is the amplitude-adjusted
// version, so its sorted multiset equals the original's bit-exactly.
IaaftResult iaaft_surrogate(const std::vector<double>& values, int max_iter,
                            std::uint64_t seed);

struct SurrogateEnsemble {
  std::vector<std::vector<double>> surrogates;
  std::vector<int> iterations_used;
  std::vector<bool> converged;
  std::string original_ref;
  std::uint64_t seed = 0;
};

// n_s IAAFT surrogates with per-surrogate seeds derived from (master_seed, index).
SurrogateEnsemble make_ensemble(const std::vector<double>& values, int n_s, int max_iter,
                                std::uint64_t master_seed,
                                const std::string& original_ref = {});

// Directory of per-surrogate CSV files plus a manifest with seeds, iteration
// counts, convergence flags, and the RNG version string.
void write_ensemble(const SurrogateEnsemble& ensemble, const std::string& directory);

}  // namespace hrvnl
