#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace eyefit {

// splitmix64 finalizer; used to derive independent stream seeds from
// (base seed, stream index) pairs.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// mt19937_64 core with hand-rolled distributions: std:: distribution output
// is implementation-defined, and artifacts must be byte-identical per seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

  // Uniform integer on [0, n), unbiased.
  std::uint64_t integer(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  // Box-Muller without the cached spare.
  double normal(double mean = 0.0, double sigma = 1.0) {
    const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    const double u2 = unit();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * mag * std::cos(6.283185307179586476925286766559 * u2);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace eyefit
