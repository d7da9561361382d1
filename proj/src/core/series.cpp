#include "hrvnl/series.hpp"

#include <algorithm>
#include <cmath>

#include "hrvnl/errors.hpp"

namespace hrvnl {

void AnalysisParams::validate() const {
  if (m < 1) throw ParameterError("params: m must be >= 1");
  if (!(r > 0.0)) throw ParameterError("params: r must be > 0");
  if (k < 1) throw ParameterError("params: k must be >= 1");
  if (l_max < 1) throw ParameterError("params: l_max must be >= 1");
  if (n_s < 20) throw ParameterError("params: n_s must be >= 20");
  if (!(alpha > 0.0 && alpha < 0.5)) throw ParameterError("params: alpha must lie in (0, 0.5)");
  if (max_iter < 1) throw ParameterError("params: max_iter must be >= 1");
}

Moments moments(const std::vector<double>& v) {
  const std::size_t n = v.size();
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= double(n);
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  double sd = n > 1 ? std::sqrt(ss / double(n - 1)) : 0.0;
  return {mean, sd};
}

NormalizedSeries normalize(const std::vector<double>& values) {
  if (values.size() < 2) throw InsufficientDataError("normalize: need at least 2 samples");
  const Moments mom = moments(values);
  if (!(mom.stddev > 0.0)) throw DegenerateInputError("normalize: zero variance input");
  NormalizedSeries out;
  out.values.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    out.values[i] = (values[i] - mom.mean) / mom.stddev;
  return out;
}

NormalizedSeries normalize(const RawSeries& series) { return normalize(series.values); }

namespace {

struct Biquad {
  double b0, b1, b2, a1, a2;  // a0 normalized to 1
};

// Second-order Butterworth high-pass via the bilinear transform.
Biquad butterworth_highpass(double cutoff) {
  const double w0 = 2.0 * M_PI * cutoff;
  const double cw = std::cos(w0);
  const double alpha = std::sin(w0) * M_SQRT1_2;  // Q = 1/sqrt(2)
  const double a0 = 1.0 + alpha;
  Biquad f;
  f.b0 = (1.0 + cw) / 2.0 / a0;
  f.b1 = -(1.0 + cw) / a0;
  f.b2 = f.b0;
  f.a1 = -2.0 * cw / a0;
  f.a2 = (1.0 - alpha) / a0;
  return f;
}

void filter_inplace(const Biquad& f, std::vector<double>& x) {
  double x1 = 0.0, x2 = 0.0, y1 = 0.0, y2 = 0.0;
  for (double& v : x) {
    double y = f.b0 * v + f.b1 * x1 + f.b2 * x2 - f.a1 * y1 - f.a2 * y2;
    x2 = x1;
    x1 = v;
    y2 = y1;
    y1 = y;
    v = y;
  }
}

}  // namespace

std::vector<double> detrend_highpass(const std::vector<double>& values,
                                     double cutoff_fraction) {
  if (values.size() < 8) throw InsufficientDataError("detrend: need at least 8 samples");
  if (!(cutoff_fraction > 0.0 && cutoff_fraction < 0.5))
    throw ParameterError("detrend: cutoff must lie in (0, 0.5)");

  const std::size_t n = values.size();
  const std::size_t pad = std::min<std::size_t>(
      n - 1, std::max<std::size_t>(12, std::size_t(3.0 / cutoff_fraction)));

  // Subtract the mean up front so a constant series maps to exact zeros and the
  // result is invariant to constant offsets.
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= double(n);

  // Odd reflection about both edges damps filter transients.
  std::vector<double> buf;
  buf.reserve(n + 2 * pad);
  for (std::size_t i = 0; i < pad; ++i)
    buf.push_back(2.0 * (values[0] - mean) - (values[pad - i] - mean));
  for (double v : values) buf.push_back(v - mean);
  for (std::size_t i = 0; i < pad; ++i)
    buf.push_back(2.0 * (values[n - 1] - mean) - (values[n - 2 - i] - mean));

  const Biquad f = butterworth_highpass(cutoff_fraction);
  filter_inplace(f, buf);
  std::reverse(buf.begin(), buf.end());
  filter_inplace(f, buf);
  std::reverse(buf.begin(), buf.end());

  std::vector<double> out(buf.begin() + std::ptrdiff_t(pad),
                          buf.begin() + std::ptrdiff_t(pad + n));

  // The filter leaves a residual mean of order 1e-12; remove it exactly.
  double out_mean = 0.0;
  for (double v : out) out_mean += v;
  out_mean /= double(n);
  for (double& v : out) v -= out_mean;
  return out;
}

std::vector<double> window(const std::vector<double>& values, std::size_t start,
                           std::size_t length) {
  if (start + length > values.size()) throw BoundsError("window: range out of bounds");
  return std::vector<double>(values.begin() + std::ptrdiff_t(start),
                             values.begin() + std::ptrdiff_t(start + length));
}

EmbeddedPatterns embed(const NormalizedSeries& series, int m) {
  if (m < 1) throw ParameterError("embed: m must be >= 1");
  const std::size_t n = series.size();
  const std::size_t order = std::size_t(m);
  if (n <= order) throw InsufficientDataError("embed: series length must exceed m");
  EmbeddedPatterns out;
  out.m = order;
  out.count = n - order;
  out.targets.resize(out.count);
  out.histories.resize(out.count * order);
  for (std::size_t i = 0; i < out.count; ++i) {
    const std::size_t t = order + i;
    out.targets[i] = series.values[t];
    for (std::size_t j = 0; j < order; ++j)
      out.histories[i * order + j] = series.values[t - 1 - j];
  }
  return out;
}

}  // namespace hrvnl
