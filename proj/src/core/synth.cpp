#include "hrvnl/synth.hpp"

#include <cmath>

#include "hrvnl/errors.hpp"
#include "hrvnl/rng.hpp"
#include "hrvnl/series.hpp"

namespace hrvnl {

namespace {

constexpr std::size_t kBilinearBurnIn = 200;

std::vector<double> ar1_raw(std::size_t n, double phi, Rng& rng) {
  std::vector<double> x(n);
  x[0] = rng.gaussian() / std::sqrt(1.0 - phi * phi);  // stationary draw
  for (std::size_t i = 1; i < n; ++i) x[i] = phi * x[i - 1] + rng.gaussian();
  return x;
}

std::vector<double> standardize(std::vector<double> x) {
  return normalize(x).values;
}

}  // namespace

std::vector<double> generate(const ProcessSpec& spec) {
  if (spec.n < 50) throw ParameterError("generate: n must be >= 50");
  Rng rng(spec.seed);
  switch (spec.kind) {
    case ProcessKind::WhiteGaussian:
      return standardize(ar1_raw(spec.n, 0.0, rng));
    case ProcessKind::Ar1: {
      if (!(std::fabs(spec.phi) < 1.0)) throw ParameterError("generate: |phi| must be < 1");
      return standardize(ar1_raw(spec.n, spec.phi, rng));
    }
    case ProcessKind::StaticTransform: {
      if (!(std::fabs(spec.phi) < 1.0)) throw ParameterError("generate: |phi| must be < 1");
      std::vector<double> base = ar1_raw(spec.n, spec.phi, rng);
      for (double& v : base) {
        switch (spec.transform) {
          case StaticMap::Square: v = v * v; break;
          case StaticMap::Cube: v = v * v * v; break;
          case StaticMap::Exp: v = std::exp(v); break;
        }
      }
      return standardize(std::move(base));
    }
    case ProcessKind::Bilinear: {
      if (!(std::fabs(spec.a) < 1.0))
        throw ParameterError("generate: bilinear |a| must be < 1 for stationarity");
      const std::size_t total = spec.n + kBilinearBurnIn;
      std::vector<double> x(total);
      double eta_prev = rng.gaussian();
      x[0] = eta_prev;
      for (std::size_t i = 1; i < total; ++i) {
        const double eta = rng.gaussian();
        x[i] = spec.a * x[i - 1] + spec.b * x[i - 1] * eta_prev + eta;
        eta_prev = eta;
      }
      return standardize(std::vector<double>(x.begin() + kBilinearBurnIn, x.end()));
    }
  }
  throw ParameterError("generate: unknown process kind");
}

ProcessKind parse_process_kind(const std::string& name) {
  if (name == "white_gaussian" || name == "white") return ProcessKind::WhiteGaussian;
  if (name == "ar1") return ProcessKind::Ar1;
  if (name == "static_transform" || name == "static") return ProcessKind::StaticTransform;
  if (name == "bilinear") return ProcessKind::Bilinear;
  throw ParameterError("unknown process kind: " + name);
}

StaticMap parse_static_map(const std::string& name) {
  if (name == "square") return StaticMap::Square;
  if (name == "cube") return StaticMap::Cube;
  if (name == "exp") return StaticMap::Exp;
  throw ParameterError("unknown static transform: " + name);
}

}  // namespace hrvnl
