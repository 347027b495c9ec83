#pragma once

#include <cstdint>
#include <random>

#include "mobsim/types.hpp"

namespace mobsim {

/// Deterministic random source. Every draw goes through uniform01(), whose
/// conversion from mt19937_64 output is fully specified, so a given seed
/// produces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi). Degenerate bounds (lo == hi) return lo exactly.
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  /// Normal via Box-Muller. Two draws per call, nothing cached, so
  /// interleaving with other draws stays reproducible.
  double normal(double mean, double sigma) {
    double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
    double u2 = uniform01();
    return mean + sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mobsim
