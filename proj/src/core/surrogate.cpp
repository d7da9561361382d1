#include "hrvnl/surrogate.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>

#include "hrvnl/errors.hpp"
#include "hrvnl/rng.hpp"

namespace hrvnl {

namespace {

std::mutex g_fftw_plan_mutex;  // FFTW planning is not thread-safe

// Real FFT of fixed length, reusable across IAAFT iterations.
class RealFft {
 public:
  explicit RealFft(std::size_t n) : n_(n), nb_(n / 2 + 1) {
    real_ = fftw_alloc_real(n_);
    spec_ = fftw_alloc_complex(nb_);
    std::scoped_lock lock(g_fftw_plan_mutex);
    fwd_ = fftw_plan_dft_r2c_1d(int(n_), real_, spec_, FFTW_ESTIMATE);
    inv_ = fftw_plan_dft_c2r_1d(int(n_), spec_, real_, FFTW_ESTIMATE);
  }
  ~RealFft() {
    std::scoped_lock lock(g_fftw_plan_mutex);
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(inv_);
    fftw_free(real_);
    fftw_free(spec_);
  }
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t bins() const { return nb_; }

  void forward(const std::vector<double>& in) {
    std::copy(in.begin(), in.end(), real_);
    fftw_execute(fwd_);
  }

  // Inverse transform of the current spectrum, scaled by 1/n.
  void inverse(std::vector<double>& out) {
    fftw_execute(inv_);
    out.resize(n_);
    const double scale = 1.0 / double(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = real_[i] * scale;
  }

  double amplitude(std::size_t k) const {
    return std::hypot(spec_[k][0], spec_[k][1]);
  }
  void set_polar(std::size_t k, double amp, double phase) {
    spec_[k][0] = amp * std::cos(phase);
    spec_[k][1] = amp * std::sin(phase);
  }
  void rescale_to_amplitude(std::size_t k, double amp) {
    const double cur = amplitude(k);
    if (cur > 0.0) {
      const double f = amp / cur;
      spec_[k][0] *= f;
      spec_[k][1] *= f;
    } else {
      spec_[k][0] = amp;
      spec_[k][1] = 0.0;
    }
  }

 private:
  std::size_t n_, nb_;
  double* real_;
  fftw_complex* spec_;
  fftw_plan fwd_, inv_;
};

std::vector<std::size_t> argsort(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  return order;
}

}  // namespace

std::vector<double> ft_surrogate(const std::vector<double>& values, std::uint64_t seed) {
  const std::size_t n = values.size();
  if (n < 8) throw InsufficientDataError("ft_surrogate: need at least 8 samples");
  RealFft fft(n);
  fft.forward(values);
  Rng rng(seed);
  // DC stays put; the Nyquist bin (even n) must stay real, so only the
  // strictly interior bins get random phases.
  const std::size_t interior_end = (n % 2 == 0) ? fft.bins() - 1 : fft.bins();
  for (std::size_t k = 1; k < interior_end; ++k) {
    const double amp = fft.amplitude(k);
    fft.set_polar(k, amp, 2.0 * M_PI * rng.uniform());
  }
  std::vector<double> out;
  fft.inverse(out);
  return out;
}

IaaftResult iaaft_surrogate(const std::vector<double>& values, int max_iter,
                            std::uint64_t seed) {
  const std::size_t n = values.size();
  if (n < 8) throw InsufficientDataError("iaaft_surrogate: need at least 8 samples");
  if (max_iter < 1) throw ParameterError("iaaft_surrogate: max_iter must be >= 1");

  std::vector<double> sorted_values = values;
  std::sort(sorted_values.begin(), sorted_values.end());

  RealFft fft(n);
  fft.forward(values);
  std::vector<double> target_amp(fft.bins());
  for (std::size_t k = 0; k < fft.bins(); ++k) target_amp[k] = fft.amplitude(k);

  // Initial candidate: random permutation of the original.
  Rng rng(seed);
  std::vector<double> candidate = values;
  rng.shuffle(candidate);

  IaaftResult result;
  std::vector<std::size_t> prev_order;
  std::vector<double> filtered;
  for (int iter = 1; iter <= max_iter; ++iter) {
    // Spectrum adjustment: impose the original amplitudes on the candidate.
    fft.forward(candidate);
    for (std::size_t k = 0; k < fft.bins(); ++k) fft.rescale_to_amplitude(k, target_amp[k]);
    fft.inverse(filtered);

    // Amplitude adjustment: rank remap onto the original multiset.
    const std::vector<std::size_t> order = argsort(filtered);
    result.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) result.values[order[i]] = sorted_values[i];

    result.iterations_used = iter;
    if (order == prev_order) {
      result.converged = true;
      break;
    }
    prev_order = order;
    candidate = result.values;
  }
  return result;
}

SurrogateEnsemble make_ensemble(const std::vector<double>& values, int n_s, int max_iter,
                                std::uint64_t master_seed, const std::string& original_ref) {
  if (n_s < 1) throw ParameterError("make_ensemble: n_s must be >= 1");
  SurrogateEnsemble ensemble;
  ensemble.original_ref = original_ref;
  ensemble.seed = master_seed;
  ensemble.surrogates.reserve(std::size_t(n_s));
  for (int i = 0; i < n_s; ++i) {
    IaaftResult r = iaaft_surrogate(values, max_iter, derive_seed(master_seed, std::uint64_t(i)));
    ensemble.surrogates.push_back(std::move(r.values));
    ensemble.iterations_used.push_back(r.iterations_used);
    ensemble.converged.push_back(r.converged);
  }
  return ensemble;
}

void write_ensemble(const SurrogateEnsemble& ensemble, const std::string& directory) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  char buf[64];
  for (std::size_t i = 0; i < ensemble.surrogates.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "surrogate_%03zu.csv", i);
    std::ofstream out(fs::path(directory) / buf);
    if (!out) throw IoError("write_ensemble: cannot open output file");
    for (double v : ensemble.surrogates[i]) {
      std::snprintf(buf, sizeof(buf), "%.17g\n", v);
      out << buf;
    }
  }
  std::ofstream manifest(fs::path(directory) / "manifest.csv");
  if (!manifest) throw IoError("write_ensemble: cannot open manifest");
  manifest << "# rng=" << kRngVersion << "\n";
  manifest << "# original=" << ensemble.original_ref << "\n";
  manifest << "# master_seed=" << ensemble.seed << "\n";
  manifest << "index,seed,iterations,converged\n";
  for (std::size_t i = 0; i < ensemble.surrogates.size(); ++i) {
    manifest << i << ',' << derive_seed(ensemble.seed, i) << ','
             << ensemble.iterations_used[i] << ',' << (ensemble.converged[i] ? 1 : 0)
             << "\n";
  }
}

}  // namespace hrvnl
