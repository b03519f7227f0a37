#pragma once

#include <cmath>
#include <cstdint>

#include "linespace/space.hpp"

// Deterministic sampling helpers.  std::uniform_real_distribution is
// implementation-defined, so the verification suites draw through these
// instead: same seed, same stream, on every platform.

namespace linespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    // xorshift* variant; period 2^64 - 1
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dull;
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform on the disc |z| <= radius (polar, area-uniform).
  complex disc(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double th = 2.0 * 3.14159265358979323846 * uniform();
    return {r * std::cos(th), r * std::sin(th)};
  }

  // Uniform in the square [-half, half]^2.
  complex box(double half) {
    return {uniform(-half, half), uniform(-half, half)};
  }

  // A chart point for the space: |xi| <= xi_max (Lorentzian needs xi_max < 1).
  complex chart_point(SpaceKind space, double xi_max) {
    (void)space;
    return disc(xi_max);
  }

 private:
  std::uint64_t state_;
};

}  // namespace linespace
