#pragma once

#include <cstdint>

#include "landscape/types.hpp"

namespace landscape {

// Deterministic random stream.  A (seed, stream_id) pair fully determines
// every draw, independent of platform and thread schedule, so any sampled
// object can be reproduced from the two integers recorded with it.
// Substreams derived through substream() are statistically independent.
//
// The generator is xoshiro256++ seeded through splitmix64; the uniform and
// normal transforms are implemented here rather than taken from <random>
// because the standard leaves distribution output unspecified.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t next_u64();
  // Uniform on [0, 1), 53-bit resolution.
  double uniform01();
  // Uniform integer in [0, bound), bound >= 1.  Rejection-free modulo is
  // avoided; uses 128-bit multiply-shift.
  std::uint64_t uniform_below(std::uint64_t bound);
  // Standard normal (Box-Muller, second value cached).
  double normal();
  // Independent standard normal real and imaginary parts.
  Complex complex_normal();

  RandomStream substream(std::uint64_t child) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t stream_id_ = 0;
  std::uint64_t state_[4] = {0, 0, 0, 0};
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace landscape
