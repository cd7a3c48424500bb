#pragma once

#include <cstdint>
#include <random>

namespace cvnet {

// SplitMix64 mixing step, used to derive substream seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Substream seed for one generated case. Mixing the suite seed with a check
// tag and the case index keeps cases independent and reproducible in any
// evaluation order.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t tag,
                             std::uint64_t index);

// Deterministic portable uniform generator. The engine is std::mt19937_64
// (fully specified by the standard); doubles are derived from the top 53 bits
// directly, so streams are identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform on (-pi, pi] for phase arguments.
  double angle();

  // Uniform on (0, pi), for beam-splitter mixing angles.
  double mixing_angle();

 private:
  std::mt19937_64 engine_;
};

}  // namespace cvnet
