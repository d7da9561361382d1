#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hrvnl/series.hpp"

namespace hrvnl {

// Autocorrelation at lags 1..l_max of a zero-mean unit-variance series,
// normalized by N - lag.
struct AutocorrProfile {
  std::vector<double> values;  // values[l-1] is the autocorrelation at lag l

  double at(int lag) const { return values.at(std::size_t(lag) - 1); }
};

AutocorrProfile autocorrelation(const NormalizedSeries& series, int l_max);

// Rank-based gaussianization: the sample of rank i (ties broken by original
// index) becomes the standard normal quantile at (i - 0.5) / N.
std::vector<double> gaussianize(const std::vector<double>& values);

// Rank-based amplitude adjustment onto the target value multiset.
std::vector<double> remap_to_marginal(const std::vector<double>& gaussian_series,
                                      const std::vector<double>& target_values);

// Tabulated correlation-transfer function C(C_G) over 0.01-width bins of the
// Gaussian correlation interval (-1, 1), specific to one target marginal.
struct CalibrationCurve {
  std::vector<double> bin_centers;
  std::vector<double> c_values;
  std::vector<std::size_t> support_counts;
  std::size_t first_populated = 0;
  std::size_t last_populated = 0;

  // Linear interpolation between bin centers. Throws ExtrapolationError
  // outside the populated range.
  double eval(double c_g) const;

  // Two-column text table (bin_center, c_value) over the populated range.
  std::string to_table() const;
};

struct CalibrationOptions {
  int n_phi = 199;       // phi grid -0.99..0.99, step 0.01
  int reps = 25;         // realizations per phi
  int deposit_lags = 20; // lags whose (C_G, C) pairs are binned
  std::uint64_t seed = 0;
};

// AR1 Monte-Carlo determination of C(C_G) for the given target marginal.
// Realizations share the target's length. Empty interior bins are filled by
// linear interpolation; a weighted isotonic pass enforces the monotonicity
// of the transfer function. Throws CalibrationFailureError when fewer than
// 10 bins are populated.
CalibrationCurve calibrate(const std::vector<double>& target_values,
                           const CalibrationOptions& options);

// Quadrature oracle for C(C_G): the double integral of the product of the
// remapped coordinates against the bivariate Gaussian density, evaluated by
// Gauss-Hermite quadrature. quantile_fn maps (0,1) to the target marginal
// (standardization is applied internally).
double c_of_cg_integral(const std::function<double(double)>& quantile_fn, double c_g);

// GLC nonlinearity index: sum over lags 1..l_max of |C_obs - C_lin| where
// C_lin is the calibration curve evaluated at the Gaussianized autocorrelation.
double glc_index(const NormalizedSeries& series, int l_max, const CalibrationCurve& curve);

}  // namespace hrvnl
