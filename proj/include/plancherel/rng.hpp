#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "plancherel/numeric.hpp"

namespace plancherel {

// Deterministic random stream: xoshiro256** seeded through splitmix64.
//
// The state is the first four outputs of splitmix64 initialized with
// seed ^ splitmix64_mix(stream_index), so (seed, stream) pairs give
// independent reproducible streams and batch work can be split by index.
// Identical (seed, stream, draw count) reproduces identical output
// bit for bit on every platform; no libc distribution functions are used.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {
    std::uint64_t sm = seed ^ mix(stream);
    for (auto& word : state_) word = next_splitmix(sm);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  // Independent child stream; used to split Monte Carlo batches per index.
  SeededStream substream(std::uint64_t index) const {
    return SeededStream(seed_, mix(stream_ + 0x9E3779B97F4A7C15ull) ^ mix(index));
  }

  std::uint64_t next_u64() {
    std::uint64_t* s = state_;
    std::uint64_t result = rotl(s[1] * 5, 7) * 9;
    std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Unbiased uniform integer in [0, bound) by rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Fisher-Yates shuffle of 1..n.
  std::vector<int> next_permutation_of(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    for (int i = n - 1; i >= 1; --i) {
      int j = static_cast<int>(next_below(static_cast<std::uint64_t>(i) + 1));
      std::swap(w[i], w[j]);
    }
    return w;
  }

  // Index drawn from non-negative weights summing to ~1; the caller is
  // expected to have verified the exact normalization.
  int next_categorical(const std::vector<double>& weights) {
    double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (total < 1.0 - 1e-12 || total > 1.0 + 1e-12)
      throw InvariantViolation("SeededStream: categorical weights do not sum to 1");
    double u = next_double() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static std::uint64_t next_splitmix(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t state_[4];
};

}  // namespace plancherel
