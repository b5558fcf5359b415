#pragma once

#include <cstdint>
#include <random>

namespace starbundle {

/// Deterministic uniform sampling on top of mt19937_64.
///
/// std::uniform_real_distribution is implementation-defined, so drawing
/// doubles through it would make reports differ between standard
/// libraries. Mapping raw 64-bit words to [0,1) by hand keeps every
/// sampled value reproducible from the seed alone.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw in [0,1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform draw in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Standard normal via Box-Muller (two uniform draws per call pair).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    while (u == 0.0) u = unit();
    const double v = unit();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double two_pi = 6.283185307179586476925286766559;
    spare_ = r * std::sin(two_pi * v);
    have_spare_ = true;
    return r * std::cos(two_pi * v);
  }

  std::uint64_t raw() { return engine_(); }

private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// splitmix64 finalizer; decorrelates nearby inputs.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Per-sample sub-seed so that sample i of suite `salt` is independent of
/// how many samples ran before it.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt,
                                 std::uint64_t index) {
  return mix_seed(seed ^ mix_seed(salt) ^ mix_seed(index * 0x5851F42D4C957F2DULL + 1));
}

}  // namespace starbundle
