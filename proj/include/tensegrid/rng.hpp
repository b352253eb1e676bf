#pragma once

#include <cmath>
#include <cstdint>

namespace tensegrid {

/// Deterministic, platform-independent RNG (splitmix64 core). std::
/// distributions are implementation-defined, so uniform/normal are done by
/// hand to keep experiment outputs byte-identical everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  /// Independent child stream; mixing the label keeps streams decorrelated
  /// and makes (seed, purpose, index) -> stream reproducible.
  Rng stream(uint64_t label, uint64_t index = 0) const {
    Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (label + 1)));
    child.next_u64();
    child.state_ ^= 0xbf58476d1ce4e5b9ULL * (index + 1);
    child.next_u64();
    return child;
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (no cached spare, for reproducibility
  /// independent of call interleaving).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  /// Log-uniform multiplier in [lo, hi] (both > 0), e.g. x[0.5, 2].
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

 private:
  uint64_t state_;
};

}  // namespace tensegrid
