#pragma once

#include <cstdint>
#include <limits>

namespace fbfmi {

// SplitMix64 step; used for seed expansion and stream derivation.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256++ (Blackman & Vigna). Satisfies UniformRandomBitGenerator so
// the <random> distributions can run on top of it. State is seeded through
// SplitMix64, the recommended initialization.
class Xoshiro256pp {
 public:
  using result_type = uint64_t;

  explicit Xoshiro256pp(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<uint64_t>::max(); }

  result_type operator()() {
    const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  static constexpr uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t state_[4];
};

// Stream-splitting rule: every independent consumer hashes (base, tag, a, b)
// through SplitMix64 and seeds its own engine with the result. Tags keep
// streams for different purposes (MCAR masks, Gibbs chains, ...) disjoint
// even when (a, b) collide.
inline uint64_t derive_seed(uint64_t base, uint64_t tag, uint64_t a = 0, uint64_t b = 0) {
  uint64_t s = base;
  uint64_t h = splitmix64(s);
  s ^= tag * 0x9e3779b97f4a7c15ULL;
  h ^= splitmix64(s);
  s ^= a * 0xd1342543de82ef95ULL;
  h ^= splitmix64(s);
  s ^= b * 0xaf251af3b0f025b5ULL;
  h ^= splitmix64(s);
  return h;
}

}  // namespace fbfmi
