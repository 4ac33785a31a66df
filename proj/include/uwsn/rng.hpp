#pragma once

#include <cmath>
#include <cstdint>

namespace uwsn {

/// splitmix64 step. Small, fast, and stable across platforms, which keeps
/// seeded runs byte-reproducible.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // Warm up so that small seeds diverge immediately.
    splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  /// Poisson count by accumulating unit-exponential arrivals; O(mean) but
  /// safe for large means where the product form would underflow.
  std::uint64_t poisson(double mean) {
    if (mean <= 0.0) return 0;
    double acc = 0.0;
    std::uint64_t count = 0;
    while (true) {
      double u = uniform();
      if (u <= 0.0) u = 0x1.0p-53;
      acc += -std::log(u);
      if (acc > mean) return count;
      ++count;
    }
  }

  /// Independent substream for chunked work: same seed + same chunk index
  /// gives the same stream regardless of evaluation order.
  static Rng substream(std::uint64_t seed, std::uint64_t chunk) {
    std::uint64_t s = seed;
    std::uint64_t mixed = splitmix64(s) ^ (0x9e3779b97f4a7c15ULL * (chunk + 1));
    return Rng(mixed);
  }

 private:
  std::uint64_t state_;
};

}  // namespace uwsn
