#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "conlab/detail/ziggurat_tables.hpp"

namespace conlab {

// 64-bit avalanche finalizer used to key independent streams.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/**
 * Deterministic random stream addressed by (seed, stream, block).
 *
 * The triple is hashed into the initial state, so any two distinct triples
 * yield statistically independent sequences and a stream may consume an
 * arbitrary number of draws without affecting any other stream.  Ensemble
 * integrators key one stream per (path, step) pair, which makes results
 * reproducible and independent of execution order.
 *
 * The hot path is header-inline: simulation kernels construct one stream
 * per path and step, so keying and the common ziggurat accept branch must
 * not cost a function call.
 */
class RandomStream {
 public:
  // Staged keying, exposed so kernels that open one stream per (path, step)
  // can hoist the stages that stay fixed across their inner loops.
  static std::uint64_t stage_seed(std::uint64_t seed) {
    return mix64(seed ^ 0x243F6A8885A308D3ULL);
  }
  static std::uint64_t stage_stream(std::uint64_t seed_key,
                                    std::uint64_t stream) {
    return mix64(seed_key ^ (stream + 0x452821E638D01377ULL));
  }
  static RandomStream from_stream_key(std::uint64_t stream_key,
                                      std::uint64_t block) {
    return RandomStream(mix64(stream_key ^ (block + 0xBE5466CF34E90C6CULL)),
                        FromState{});
  }

  RandomStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t block)
      : RandomStream(
            mix64(stage_stream(stage_seed(seed), stream) ^
                  (block + 0xBE5466CF34E90C6CULL)),
            FromState{}) {}
  explicit RandomStream(std::uint64_t seed) : RandomStream(seed, 0, 0) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on the open interval (0, 1).
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) *
           (1.0 / 9007199254740992.0);
  }

  // Standard normal draw.  One word feeds the layer index (bits 0-7), the
  // sign (bit 8) and a 53-bit magnitude (bits 11-63); the sign is applied
  // by flipping the sign bit so the common case stays branch-free.
  double normal() {
    const std::uint64_t u = next_u64();
    const unsigned iz = static_cast<unsigned>(u & 255u);
    const std::uint64_t mag = u >> 11;
    const std::uint64_t sign = (u & 256u) << 55;
    if (mag < detail::kZigK[iz]) {
      const double x = static_cast<double>(mag) * detail::kZigW[iz];
      return std::bit_cast<double>(std::bit_cast<std::uint64_t>(x) ^ sign);
    }
    return normal_rare(iz, mag, sign);
  }

  void fill_normal(double* out, int count) {
    for (int i = 0; i < count; ++i) out[i] = normal();
  }

  // Unbiased draw from {0, ..., bound-1}; bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Uniform random permutation of {0, ..., m-1} by Fisher-Yates.
  std::vector<int> permutation(int m);

 private:
  struct FromState {};
  RandomStream(std::uint64_t state, FromState) : state_(state) {}

  // Wedge and tail of the ziggurat, about 1.1% of draws.
  double normal_rare(unsigned iz, std::uint64_t mag, std::uint64_t sign);

  std::uint64_t state_;
};

}  // namespace conlab
