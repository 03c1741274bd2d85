// Deterministic seeded RNG (xoshiro256** core, splitmix64 seeding) with
// labeled substream derivation. All randomness in the library flows through
// instances of this generator; there is no global RNG state anywhere.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace eccm {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // [0, 1)
  double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * u01(); }

  // Box-Muller; consumes exactly two uniforms per sample.
  double gaussian() {
    const double u1 = 1.0 - u01();  // (0, 1]
    const double u2 = u01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Stable substream seed from a master seed, a label, and an index.
  // Streams with distinct labels are independent, so toggling one consumer
  // (e.g. the tracker) never perturbs the draws seen by another.
  static std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                                   std::uint64_t index = 0) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : label) {
      h ^= c;
      h *= 0x100000001B3ull;
    }
    std::uint64_t s = master ^ (h * 0x9E3779B97F4A7C15ull) ^ (index + 1);
    splitmix64(s);
    splitmix64(s);
    return splitmix64(s);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_[4];
};

}  // namespace eccm
