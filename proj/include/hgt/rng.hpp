#pragma once

#include <cstdint>
#include <random>

namespace hgt {

// splitmix64 step; used to derive independent per-trial stream seeds from a
// master seed so that trial i is reproducible in isolation.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Seeded random stream. mt19937_64 output is fixed by the standard, so a
// given seed reproduces the same draws on every platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : eng_(seed), seed_(seed) {}

  static RngStream substream(std::uint64_t master, std::uint64_t index) {
    return RngStream(mix_seed(master, index));
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return eng_(); }

  // Unbiased uniform draw in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t bound = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= bound);
    return v % n;
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 eng_;
  std::uint64_t seed_;
};

}  // namespace hgt
