#pragma once

// Counter-based random numbers and Poisson variates.

#include <array>
#include <cstdint>
#include <limits>

namespace knockout {

/// Philox4x32-10 as a UniformRandomBitGenerator producing 64-bit words.
///
/// The 64-bit key selects a stream (seed), the high half of the 128-bit
/// counter selects a substream (e.g. trial index) and the low half advances
/// within it. Streams for different (seed, substream) pairs do not overlap.
class Philox4x32 {
 public:
  using result_type = std::uint64_t;
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32(std::uint64_t seed, std::uint64_t substream);

  /// One raw bijection of the counter block under the key.
  static Block generate(Block counter, Key key);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

 private:
  Key key_;
  std::uint64_t substream_;
  std::uint64_t block_index_ = 0;
  Block buffer_{};
  unsigned used_ = 4;  // 32-bit words consumed from buffer_
};

/// Poisson variate with the given mean (> 0). Inversion below mean 30,
/// transformed rejection (PTRS) above.
std::uint64_t sample_poisson(Philox4x32& rng, double mean);

}  // namespace knockout
