#pragma once

#include <cstdint>
#include <string_view>

namespace gonalis {

// Deterministic 64-bit stream (splitmix64).  Every randomized routine in the
// library draws from a stream keyed by (seed, purpose tag) so that runs with
// the same seed are reproducible regardless of call order elsewhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Derives an independent stream for a named purpose.
  Rng(std::uint64_t seed, std::string_view purpose) : state_(seed) {
    // FNV-1a over the tag, folded into the seed before the first step.
    std::uint64_t h = 1469598103934665603ull;
    for (char c : purpose) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    state_ ^= h;
    next();
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n).  n must be nonzero.
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling to avoid modulo bias.
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

private:
  std::uint64_t state_;
};

}  // namespace gonalis
