#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <conlab/rng.hpp>

using conlab::RandomStream;

TEST_CASE("same triple reproduces the same sequence") {
  RandomStream a(42, 7, 3);
  RandomStream b(42, 7, 3);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct triples give distinct sequences") {
  RandomStream base(42, 7, 3);
  const std::uint64_t first = base.next_u64();
  CHECK(RandomStream(43, 7, 3).next_u64() != first);
  CHECK(RandomStream(42, 8, 3).next_u64() != first);
  CHECK(RandomStream(42, 7, 4).next_u64() != first);
}

TEST_CASE("staged keying matches the direct constructor") {
  const std::uint64_t seed_key = RandomStream::stage_seed(99);
  for (std::uint64_t stream : {0ull, 5ull, 1234567ull}) {
    const std::uint64_t stream_key =
        RandomStream::stage_stream(seed_key, stream);
    for (std::uint64_t block : {0ull, 1ull, 77777ull}) {
      RandomStream staged = RandomStream::from_stream_key(stream_key, block);
      RandomStream direct(99, stream, block);
      for (int i = 0; i < 16; ++i) {
        REQUIRE(staged.next_u64() == direct.next_u64());
      }
    }
  }
}

TEST_CASE("uniform01 lands strictly inside the unit interval") {
  RandomStream rs(1);
  for (int i = 0; i < 200000; ++i) {
    const double u = rs.uniform01();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("normal moments match the standard normal") {
  RandomStream rs(7);
  const int n = 2000000;
  double s1 = 0, s2 = 0, s4 = 0;
  int tail = 0;
  for (int i = 0; i < n; ++i) {
    const double x = rs.normal();
    s1 += x;
    s2 += x * x;
    s4 += x * x * x * x;
    if (std::abs(x) > 3.6541528853610088) ++tail;
  }
  const double mean = s1 / n;
  const double var = s2 / n;
  const double kurt = s4 / n / (var * var);
  CHECK(std::abs(mean) < 5.0 / std::sqrt(double(n)));
  CHECK(std::abs(var - 1.0) < 5.0 * std::sqrt(2.0 / n));
  CHECK(std::abs(kurt - 3.0) < 5.0 * std::sqrt(96.0 / n));
  // Mass beyond the ziggurat base layer: 2 (1 - Phi(r)) = 2.566e-4.
  const double p = 2.566e-4;
  CHECK(std::abs(double(tail) / n - p) <
        5.0 * std::sqrt(p * (1 - p) / n));
}

TEST_CASE("normal output is sign symmetric") {
  RandomStream rs(11);
  const int n = 1000000;
  int neg = 0;
  for (int i = 0; i < n; ++i) neg += rs.normal() < 0.0;
  CHECK(std::abs(double(neg) / n - 0.5) < 5.0 * 0.5 / std::sqrt(double(n)));
}

TEST_CASE("uniform_below stays in range and is unbiased") {
  RandomStream rs(3);
  const std::uint64_t bound = 7;
  std::vector<int> hist(bound, 0);
  const int n = 700000;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t v = rs.uniform_below(bound);
    REQUIRE(v < bound);
    ++hist[static_cast<std::size_t>(v)];
  }
  const double expect = double(n) / double(bound);
  const double sd = std::sqrt(expect * (1.0 - 1.0 / double(bound)));
  for (std::uint64_t k = 0; k < bound; ++k) {
    CHECK(std::abs(hist[k] - expect) < 5.0 * sd);
  }
  CHECK(rs.uniform_below(1) == 0);
}

TEST_CASE("permutation is a permutation and is uniform on S3") {
  RandomStream rs(5);
  for (int m : {1, 2, 5, 33}) {
    std::vector<int> p = rs.permutation(m);
    std::sort(p.begin(), p.end());
    for (int i = 0; i < m; ++i) REQUIRE(p[i] == i);
  }
  // All six orders of {0,1,2} occur with equal frequency.
  std::vector<int> counts(6, 0);
  const int n = 120000;
  for (int i = 0; i < n; ++i) {
    const std::vector<int> p = rs.permutation(3);
    const int code = p[0] * 2 + (p[1] > p[2] ? 1 : 0);
    ++counts[static_cast<std::size_t>(code)];
  }
  const double expect = n / 6.0;
  const double sd = std::sqrt(expect * (1.0 - 1.0 / 6.0));
  for (int k = 0; k < 6; ++k) CHECK(std::abs(counts[k] - expect) < 5.0 * sd);
}

TEST_CASE("fill_normal equals repeated single draws") {
  RandomStream a(17, 2, 9);
  RandomStream b(17, 2, 9);
  double buf[64];
  a.fill_normal(buf, 64);
  for (int i = 0; i < 64; ++i) REQUIRE(buf[i] == b.normal());
}
