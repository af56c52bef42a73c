#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace mlucb {

/// Deterministic counter-based generator (SplitMix64). The state advances by
/// a fixed odd constant and each output is a mix of the new state, so streams
/// are bit-identical across platforms and cheap to fork. Not cryptographic.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), from the top 53 bits of one draw.
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). Modulo bias is below n / 2^64 and irrelevant
  /// at the index ranges used here.
  std::uint64_t uniform_below(std::uint64_t n) { return next() % n; }

  /// Standard normal draw via Box-Muller (cosine branch only). Consumes
  /// exactly two uniforms per call and keeps no cached state, so sequences
  /// replay identically regardless of call pattern.
  double gaussian() {
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  double gaussian(double mean, double variance) {
    return mean + std::sqrt(variance) * gaussian();
  }

 private:
  std::uint64_t state_;
};

/// Purpose tags for derived sub-seeds. Every consumer of randomness gets its
/// own stream, so adding or removing one consumer never shifts the draws seen
/// by another.
enum class Stream : std::uint64_t {
  ground_truth = 1,
  arrivals = 2,
  reward_noise = 3,
  validation_pairs = 4,
  policy_init = 5,
  replay = 6,
  policy_choice = 7,
};

/// Derives an independent sub-seed for (seed, stream, salt) by chaining
/// SplitMix64 mixes. The salt carries the per-run seed where applicable.
inline std::uint64_t derive_seed(std::uint64_t seed, Stream stream,
                                 std::uint64_t salt = 0) {
  SplitMix64 a(seed);
  SplitMix64 b(a.next() ^
               (0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(stream) + 1)));
  SplitMix64 c(b.next() ^ (0xD1B54A32D192ED03ull * (salt + 1)));
  return c.next();
}

}  // namespace mlucb
