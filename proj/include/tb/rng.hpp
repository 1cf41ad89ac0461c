// Seeded RNG with platform-independent output streams.
//
// std::uniform_*_distribution is implementation-defined, so reports seeded
// with the same value could differ between standard libraries.  All random
// draws in tburn go through this wrapper instead.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tb {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, m); modulo bias is irrelevant at the sizes used here.
  std::uint64_t below(std::uint64_t m) { return eng_() % m; }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller on raw uniforms.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace tb
