#pragma once

#include <cstdint>

namespace trimoduli {

// SplitMix64 (Steele, Lea, Flood): advances the state by the golden-ratio
// increment and mixes it. Used for seeding and sub-stream derivation.
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// xoshiro256++ (Blackman, Vigna). The generator is part of the contract:
// pinned-seed expectations stay valid across platforms and releases, which
// the standard library distributions do not guarantee.
class Xoshiro256PlusPlus {
 public:
  explicit constexpr Xoshiro256PlusPlus(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  constexpr std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) from the top 53 bits.
  constexpr double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }

  std::uint64_t state_[4]{};
};

// Seed for chunk i of a sampling run: output i+1 of the SplitMix64 stream
// started at `seed`. Pure in (seed, i), so chunked runs can be generated in
// any order by any number of workers and still match.
constexpr std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  std::uint64_t s = seed + chunk * 0x9E3779B97F4A7C15ull;
  return splitmix64(s);
}

}  // namespace trimoduli
