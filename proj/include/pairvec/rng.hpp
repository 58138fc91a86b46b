#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace pairvec::rng {

// All randomness in the toolkit flows from one root seed through named
// sub-streams ("pairgen.window", "trainer.negatives.0", ...), so adding a
// consumer never perturbs another consumer's stream.

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::mt19937_64 substream(uint64_t root_seed, std::string_view name) {
  return std::mt19937_64(splitmix64(root_seed ^ fnv1a64(name)));
}

// Uniform double in [0, 1) with 53 random bits. Hand-rolled because the
// standard distributions are not pinned across library implementations and
// pair streams must be reproducible byte for byte.
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). Rejection sampling keeps it unbiased.
inline uint64_t uniform_below(std::mt19937_64& g, uint64_t n) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = g();
  } while (x >= limit);
  return x % n;
}

}  // namespace pairvec::rng
