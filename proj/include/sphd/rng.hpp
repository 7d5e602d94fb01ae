#pragma once

#include <cstdint>
#include <random>

namespace sphd {

// splitmix64 step, used only to spread (seed, stream) pairs into
// well-separated engine seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seeded generator with independent streams. The algorithm is fixed for
// reproducibility: mt19937_64 (pinned by the C++ standard) seeded through
// splitmix64, with doubles built from the top 53 bits, so identical
// (seed, stream) pairs produce identical values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t state = seed;
    const std::uint64_t a = splitmix64(state);
    state = stream;
    const std::uint64_t b = splitmix64(state);
    engine_.seed(a ^ (b * 0x2545f4914f6cdd1dULL));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sphd
