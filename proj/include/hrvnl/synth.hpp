#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hrvnl {

enum class ProcessKind {
  WhiteGaussian,
  Ar1,
  StaticTransform,  // pointwise map of an AR1 base, then standardized
  Bilinear,         // x_n = a x_{n-1} + b x_{n-1} eta_{n-1} + eta_n
};

enum class StaticMap {
  Square,
  Cube,
  Exp,
};

struct ProcessSpec {
  ProcessKind kind = ProcessKind::WhiteGaussian;
  std::size_t n = 300;
  double phi = 0.0;           // AR1 coefficient (also the static-transform base)
  double a = 0.4;             // bilinear linear coefficient
  double b = 0.4;             // bilinear coupling coefficient
  StaticMap transform = StaticMap::Cube;
  std::uint64_t seed = 0;
};

// Deterministic synthetic series, standardized to zero mean / unit sample
// standard deviation. AR1 starts from its stationary distribution; the
// bilinear process discards a 200-sample burn-in.
std::vector<double> generate(const ProcessSpec& spec);

// Parse helpers for the CLI surface.
ProcessKind parse_process_kind(const std::string& name);
StaticMap parse_static_map(const std::string& name);

}  // namespace hrvnl
