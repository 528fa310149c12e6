#pragma once

#include "spinops/conversion.hpp"
#include "spinops/frames.hpp"

#include <cstdint>

namespace spinops {

/// Deterministic 64-bit generator (splitmix64). The same seed produces the
/// same sequence on every platform, which keeps seeded verification runs
/// reproducible in CI.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Complex complex_uniform(double lo, double hi) {
    const double re = uniform(lo, hi);
    const double im = uniform(lo, hi);
    return {re, im};
  }

 private:
  std::uint64_t state_;
};

/// Frame change with entries uniform in [-1, 1]; each matrix is redrawn
/// until |det| >= 0.1.
FrameChange random_frame_change(SplitMix64& rng);

/// Operator with real and imaginary parts uniform in [-1, 1].
Matrix4c random_operator(SplitMix64& rng);

/// Decomposition with coefficients uniform in [-1, 1]; w is antisymmetrized.
OperatorDecomposition random_decomposition(SplitMix64& rng);

}  // namespace spinops
