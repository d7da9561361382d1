#include "hrvnl/glc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hrvnl/errors.hpp"
#include "hrvnl/rng.hpp"
#include "hrvnl/special.hpp"

namespace hrvnl {

namespace {

constexpr double kBinWidth = 0.01;
constexpr std::size_t kBinCount = 200;  // (-1, 1) in 0.01-width bins

// Stable argsort: ties broken by original index.
std::vector<std::size_t> argsort(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  return order;
}

}  // namespace

AutocorrProfile autocorrelation(const NormalizedSeries& series, int l_max) {
  const std::size_t n = series.size();
  if (l_max < 1) throw ParameterError("autocorrelation: l_max must be >= 1");
  if (std::size_t(l_max) >= n - 1)
    throw InsufficientDataError("autocorrelation: l_max too large for series length");
  AutocorrProfile out;
  out.values.resize(std::size_t(l_max));
  for (int lag = 1; lag <= l_max; ++lag) {
    const std::size_t l = std::size_t(lag);
    double acc = 0.0;
    for (std::size_t i = 0; i + l < n; ++i) acc += series.values[i] * series.values[i + l];
    out.values[l - 1] = acc / double(n - l);
  }
  return out;
}

std::vector<double> gaussianize(const std::vector<double>& values) {
  const std::size_t n = values.size();
  if (n < 2) throw InsufficientDataError("gaussianize: need at least 2 samples");
  const std::vector<std::size_t> order = argsort(values);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[order[i]] = norm_quantile((double(i) + 0.5) / double(n));
  return out;
}

std::vector<double> remap_to_marginal(const std::vector<double>& gaussian_series,
                                      const std::vector<double>& target_values) {
  if (gaussian_series.size() != target_values.size())
    throw ShapeError("remap_to_marginal: length mismatch");
  std::vector<double> sorted_target = target_values;
  std::sort(sorted_target.begin(), sorted_target.end());
  const std::vector<std::size_t> order = argsort(gaussian_series);
  std::vector<double> out(gaussian_series.size());
  for (std::size_t i = 0; i < order.size(); ++i) out[order[i]] = sorted_target[i];
  return out;
}

double CalibrationCurve::eval(double c_g) const {
  if (bin_centers.empty()) throw CalibrationFailureError("curve: empty");
  const double lo = bin_centers[first_populated] - kBinWidth / 2.0;
  const double hi = bin_centers[last_populated] + kBinWidth / 2.0;
  if (c_g < lo || c_g > hi)
    throw ExtrapolationError("curve: Gaussian correlation outside populated support");
  const double x = std::clamp(c_g, bin_centers[first_populated], bin_centers[last_populated]);
  if (first_populated == last_populated) return c_values[first_populated];
  const double offset = (x - bin_centers[first_populated]) / kBinWidth;
  std::size_t idx = first_populated + std::size_t(offset);
  if (idx >= last_populated) idx = last_populated - 1;
  const double frac = (x - bin_centers[idx]) / kBinWidth;
  return c_values[idx] + frac * (c_values[idx + 1] - c_values[idx]);
}

std::string CalibrationCurve::to_table() const {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = first_populated; i <= last_populated; ++i)
    os << bin_centers[i] << '\t' << c_values[i] << '\n';
  return os.str();
}

namespace {

// Pool-adjacent-violators: weighted isotonic regression in place.
void isotonic_inplace(std::vector<double>& y, std::vector<double>& w) {
  const std::size_t n = y.size();
  std::vector<double> level(n), weight(n);
  std::vector<std::size_t> span(n);
  std::size_t blocks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    level[blocks] = y[i];
    weight[blocks] = w[i];
    span[blocks] = 1;
    ++blocks;
    while (blocks > 1 && level[blocks - 2] > level[blocks - 1]) {
      const double wsum = weight[blocks - 2] + weight[blocks - 1];
      level[blocks - 2] =
          (level[blocks - 2] * weight[blocks - 2] + level[blocks - 1] * weight[blocks - 1]) / wsum;
      weight[blocks - 2] = wsum;
      span[blocks - 2] += span[blocks - 1];
      --blocks;
    }
  }
  std::size_t pos = 0;
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t j = 0; j < span[b]; ++j) y[pos++] = level[b];
}

}  // namespace

CalibrationCurve calibrate(const std::vector<double>& target_values,
                           const CalibrationOptions& options) {
  const std::size_t n = target_values.size();
  if (n < 50) throw ParameterError("calibrate: target marginal must have at least 50 values");
  if (options.n_phi < 50) throw ParameterError("calibrate: n_phi must be >= 50");
  if (options.reps < 1) throw ParameterError("calibrate: reps must be >= 1");
  if (options.deposit_lags < 1) throw ParameterError("calibrate: deposit_lags must be >= 1");

  std::vector<double> bin_sum(kBinCount, 0.0);
  std::vector<std::size_t> bin_count(kBinCount, 0);

  const int lags = std::min<int>(options.deposit_lags, int(n) - 2);
  for (int pi = 0; pi < options.n_phi; ++pi) {
    const double phi = -0.99 + 1.98 * double(pi) / double(options.n_phi - 1);
    for (int rep = 0; rep < options.reps; ++rep) {
      const std::uint64_t cell = std::uint64_t(pi) * std::uint64_t(options.reps) + std::uint64_t(rep);
      Rng rng(derive_seed(options.seed, cell));
      std::vector<double> z(n);
      z[0] = rng.gaussian() / std::sqrt(1.0 - phi * phi);  // stationary draw
      for (std::size_t i = 1; i < n; ++i) z[i] = phi * z[i - 1] + rng.gaussian();

      // The Gaussian coordinate is the autocorrelation of the gaussianized
      // realization, matching how glc_index computes C_G at evaluation time.
      // Depositing against the raw draw instead would shift the curve by the
      // rank-channel attenuation (about 0.03 near |C_G| = 1).
      const NormalizedSeries zn = normalize(gaussianize(z));
      const AutocorrProfile cg = autocorrelation(zn, lags);
      const std::vector<double> remapped = remap_to_marginal(z, target_values);
      const NormalizedSeries rn = normalize(remapped);
      const AutocorrProfile c = autocorrelation(rn, lags);

      for (int lag = 1; lag <= lags; ++lag) {
        const double x = cg.at(lag);
        if (!(x > -1.0 && x < 1.0)) continue;
        const std::size_t bin = std::size_t((x + 1.0) / kBinWidth);
        if (bin >= kBinCount) continue;
        bin_sum[bin] += c.at(lag);
        ++bin_count[bin];
      }
    }
  }

  CalibrationCurve curve;
  curve.bin_centers.resize(kBinCount);
  curve.c_values.assign(kBinCount, 0.0);
  curve.support_counts = bin_count;
  for (std::size_t b = 0; b < kBinCount; ++b)
    curve.bin_centers[b] = -1.0 + (double(b) + 0.5) * kBinWidth;

  std::vector<std::size_t> populated;
  for (std::size_t b = 0; b < kBinCount; ++b)
    if (bin_count[b] > 0) populated.push_back(b);
  if (populated.size() < 10)
    throw CalibrationFailureError("calibrate: fewer than 10 populated bins");

  // Bin means, then a weighted isotonic pass over the populated bins: the
  // transfer function is monotone, so residual Monte-Carlo wiggles are pooled.
  std::vector<double> means(populated.size());
  std::vector<double> weights(populated.size());
  for (std::size_t i = 0; i < populated.size(); ++i) {
    means[i] = bin_sum[populated[i]] / double(bin_count[populated[i]]);
    weights[i] = double(bin_count[populated[i]]);
  }
  isotonic_inplace(means, weights);
  for (std::size_t i = 0; i < populated.size(); ++i) curve.c_values[populated[i]] = means[i];

  curve.first_populated = populated.front();
  curve.last_populated = populated.back();

  // Linear interpolation across empty interior bins.
  for (std::size_t i = 0; i + 1 < populated.size(); ++i) {
    const std::size_t a = populated[i];
    const std::size_t b = populated[i + 1];
    for (std::size_t j = a + 1; j < b; ++j) {
      const double frac = double(j - a) / double(b - a);
      curve.c_values[j] = curve.c_values[a] + frac * (curve.c_values[b] - curve.c_values[a]);
    }
  }
  return curve;
}

namespace {

struct GaussHermite {
  std::vector<double> nodes;    // abscissas for weight exp(-t^2)
  std::vector<double> weights;
};

// Newton iteration on the Hermite recurrence (physicists' convention).
GaussHermite gauss_hermite(std::size_t n) {
  GaussHermite gh;
  gh.nodes.resize(n);
  gh.weights.resize(n);
  const double pim4 = 0.7511255444649425;  // pi^(-1/4)
  const std::size_t m = (n + 1) / 2;
  double z = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == 0)
      z = std::sqrt(double(2 * n + 1)) - 1.85575 * std::pow(double(2 * n + 1), -0.16667);
    else if (i == 1)
      z -= 1.14 * std::pow(double(n), 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * gh.nodes[0];
    else if (i == 3)
      z = 1.91 * z - 0.91 * gh.nodes[1];
    else
      z = 2.0 * z - gh.nodes[i - 2];
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = pim4, p2 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / double(j + 1)) * p2 -
             std::sqrt(double(j) / double(j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * double(n)) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) < 1e-15) break;
    }
    gh.nodes[i] = z;
    gh.nodes[n - 1 - i] = -z;
    gh.weights[i] = 2.0 / (pp * pp);
    gh.weights[n - 1 - i] = gh.weights[i];
  }
  return gh;
}

}  // namespace

double c_of_cg_integral(const std::function<double(double)>& quantile_fn, double c_g) {
  if (!(c_g > -1.0 && c_g < 1.0)) throw DomainError("c_of_cg_integral: |c_g| must be < 1");
  static const GaussHermite gh = gauss_hermite(96);
  const std::size_t n = gh.nodes.size();
  const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);

  // Extreme nodes reach Phi(z) = 1 to double precision; clamp the argument so
  // unbounded quantile functions stay finite (the weight there is ~e^-160).
  const auto eval_q = [&](double z) {
    const double u = std::clamp(norm_cdf(z), 1e-16, 1.0 - 1e-16);
    const double q = quantile_fn(u);
    if (!std::isfinite(q))
      throw IntegrationError("c_of_cg_integral: non-finite quantile evaluation");
    return q;
  };

  // g(z) = F^{-1}(Phi(z)) evaluated at the quadrature nodes (z = sqrt(2) t).
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = eval_q(M_SQRT2 * gh.nodes[i]);

  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    m1 += gh.weights[i] * g[i];
    m2 += gh.weights[i] * g[i] * g[i];
  }
  m1 *= inv_sqrt_pi;
  m2 *= inv_sqrt_pi;
  const double var = m2 - m1 * m1;
  if (!(var > 0.0)) throw IntegrationError("c_of_cg_integral: degenerate marginal");

  // E[g(x) g(y)] with y = c_g x + sqrt(1 - c_g^2) w; x, w independent N(0,1).
  const double root = std::sqrt(1.0 - c_g * c_g);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = M_SQRT2 * gh.nodes[i];
    double inner = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double y = c_g * x + root * M_SQRT2 * gh.nodes[j];
      inner += gh.weights[j] * eval_q(y);
    }
    acc += gh.weights[i] * g[i] * inner;
  }
  acc *= inv_sqrt_pi * inv_sqrt_pi;
  return (acc - m1 * m1) / var;
}

double glc_index(const NormalizedSeries& series, int l_max, const CalibrationCurve& curve) {
  const AutocorrProfile c_obs = autocorrelation(series, l_max);
  const NormalizedSeries gaussianized = normalize(gaussianize(series.values));
  const AutocorrProfile c_g = autocorrelation(gaussianized, l_max);
  double acc = 0.0;
  for (int lag = 1; lag <= l_max; ++lag)
    acc += std::fabs(c_obs.at(lag) - curve.eval(c_g.at(lag)));
  return acc;
}

}  // namespace hrvnl
