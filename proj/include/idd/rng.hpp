#pragma once

#include <cstdint>

namespace idd {

// SplitMix64 finalizer. Used as a counter-based generator: the stream is a
// pure function of (seed, counter), so instances reproduce across platforms.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(mix64(seed ^ 0xa076bc9d2d4c4ce1ULL)) {}

  std::uint64_t next_u64() { return mix64(seed_ + counter_++ * 0x2545f4914f6cdd1dULL); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace idd
