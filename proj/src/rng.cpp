#include "cvnet/rng.hpp"

#include <cmath>
#include <numbers>

namespace cvnet {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t tag,
                             std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ splitmix64(tag)) ^ index);
}

double Rng::angle() {
  // pi - 2 pi u maps [0, 1) onto (-pi, pi].
  return std::numbers::pi * (1.0 - 2.0 * uniform());
}

double Rng::mixing_angle() {
  double u = uniform();
  if (u == 0.0) u = 0.5;  // keep the open interval open
  return u * std::numbers::pi;
}

}  // namespace cvnet
