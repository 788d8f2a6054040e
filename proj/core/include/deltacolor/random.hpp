#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace deltacolor {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Keyed mixing of (seed, a, b) into one 64-bit key. Used to derive
// independent per-node, per-round streams.
constexpr std::uint64_t mix_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) noexcept {
  std::uint64_t h = splitmix64(seed ^ 0x6a09e667f3bcc909ULL);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ (b * 0xd1342543de82ef95ULL));
  return h;
}

// xoshiro256** seeded through splitmix64. Output is fully specified, so
// every draw is reproducible across platforms and standard libraries.
// Satisfies UniformRandomBitGenerator, but callers should prefer the
// members below over <random> distributions, whose output is
// implementation-defined.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0) noexcept {
    std::uint64_t x = seed;
    for (auto& s : s_) {
      x = splitmix64(x);
      s = x;
    }
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return next(); }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound) noexcept {
    // Lemire's multiply-shift with rejection.
    __uint128_t m = static_cast<__uint128_t>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<__uint128_t>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform double in [0, 1) with 53 bits of precision.
  double uniform_real() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) noexcept { return uniform_real() < p; }

  template <class T>
  void shuffle(std::span<T> items) noexcept {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[uniform(i)]);
    }
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

  std::uint64_t s_[4]{};
};

// The randomness a node sees in a given round: a deterministic function of
// (seed, node id, round).
inline Rng node_stream(std::uint64_t seed, std::uint64_t node_id, std::uint64_t round) noexcept {
  return Rng(mix_key(seed, node_id, round));
}

}  // namespace deltacolor
