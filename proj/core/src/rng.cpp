#include "conlab/rng.hpp"

#include <cmath>

#include "conlab/errors.hpp"

namespace conlab {

namespace {
constexpr double kTailStart = 3.6541528853610088;
}

double RandomStream::normal_rare(unsigned iz, std::uint64_t mag,
                                 std::uint64_t sign) {
  for (;;) {
    if (iz == 0) {
      // Exponential-majorant sample of the tail beyond the last layer.
      double x, y;
      do {
        x = -std::log(uniform01()) / kTailStart;
        y = -std::log(uniform01());
      } while (y + y < x * x);
      return std::bit_cast<double>(
          std::bit_cast<std::uint64_t>(kTailStart + x) ^ sign);
    }
    const double x = static_cast<double>(mag) * detail::kZigW[iz];
    if (detail::kZigF[iz] +
            uniform01() * (detail::kZigF[iz - 1] - detail::kZigF[iz]) <
        std::exp(-0.5 * x * x)) {
      return std::bit_cast<double>(std::bit_cast<std::uint64_t>(x) ^ sign);
    }
    const std::uint64_t u = next_u64();
    iz = static_cast<unsigned>(u & 255u);
    mag = u >> 11;
    sign = (u & 256u) << 55;
    if (mag < detail::kZigK[iz]) {
      const double accepted = static_cast<double>(mag) * detail::kZigW[iz];
      return std::bit_cast<double>(std::bit_cast<std::uint64_t>(accepted) ^
                                   sign);
    }
  }
}

std::uint64_t RandomStream::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("uniform_below: bound must be >= 1");
  // Lemire's multiply-shift rejection method, exactly uniform.
  std::uint64_t x = next_u64();
  __uint128_t prod = static_cast<__uint128_t>(x) * bound;
  std::uint64_t low = static_cast<std::uint64_t>(prod);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = next_u64();
      prod = static_cast<__uint128_t>(x) * bound;
      low = static_cast<std::uint64_t>(prod);
    }
  }
  return static_cast<std::uint64_t>(prod >> 64);
}

std::vector<int> RandomStream::permutation(int m) {
  if (m < 0) throw InvalidArgument("permutation: m must be >= 0");
  std::vector<int> p(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = i;
  for (int i = m - 1; i > 0; --i) {
    const int j = static_cast<int>(
        uniform_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
  }
  return p;
}

}  // namespace conlab
