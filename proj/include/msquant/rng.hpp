#pragma once

#include <array>
#include <cstdint>

namespace msq {

/// SplitMix64 finalizer; used to derive substream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// xoshiro256** with fixed variate generators. The generation methods are
/// part of the reproducibility contract: changing any of them changes every
/// simulated quantile table for a given seed.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal by the Marsaglia polar method (second variate cached).
  double normal();

  /// Poisson(mean): multiplicative inversion below mean 30, PTRS above.
  std::uint64_t poisson(double mean);

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::array<std::uint64_t, 4> s_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Independent stream for repetition `rep_index` under `seed`. The mapping is
/// a pure function of the pair, so results do not depend on which worker
/// runs which repetition.
Xoshiro256 rng_substream(std::uint64_t seed, std::uint64_t rep_index);

}  // namespace msq
