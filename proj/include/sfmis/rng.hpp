#pragma once

#include <cstdint>

namespace sfmis {

// Counter-based generator: output i is a pure function of (key, i), so any
// draw can be reproduced without replaying the stream and independent streams
// can be derived for (seed, node, round) tuples.  The mixer is splitmix64
// (Vigna's finalizer over a Weyl sequence); the algorithm identifier written
// into output files is "splitmix64".
inline constexpr const char* kRngAlgorithm = "splitmix64";

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t key) : key_(key) {}

  // Derive an independent stream; mixing the tag through the finalizer keeps
  // derive(k, a) and derive(k, b) decorrelated even for adjacent tags.
  Rng derive(std::uint64_t tag) const { return Rng(splitmix64(key_ ^ splitmix64(tag))); }
  Rng derive(std::uint64_t a, std::uint64_t b) const { return derive(a).derive(b); }

  std::uint64_t next_u64() { return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++ctr_); }

  // Uniform in [0, 1); 53-bit mantissa, bit-identical across platforms.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound) without modulo bias (Lemire rejection).
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t reject_below = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      __uint128_t m = static_cast<__uint128_t>(next_u64()) * bound;
      if (static_cast<std::uint64_t>(m) >= reject_below) return static_cast<std::uint64_t>(m >> 64);
    }
  }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

}  // namespace sfmis
