#include <doctest.h>

#include <cmath>

#include "ifr/philox.hpp"

using namespace ifr::rng;

TEST_CASE("known-answer vectors") {
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == Counter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        Counter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        Counter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("fnv1a64") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("keyed normals are deterministic and distinct per key") {
  const double a = keyed_standard_normal(42, 3, "GR1", "x");
  CHECK(a == keyed_standard_normal(42, 3, "GR1", "x"));
  CHECK(a != keyed_standard_normal(43, 3, "GR1", "x"));
  CHECK(a != keyed_standard_normal(42, 4, "GR1", "x"));
  CHECK(a != keyed_standard_normal(42, 3, "GR1", "y"));
  // the separator keeps (group, member) splits apart
  CHECK(keyed_standard_normal(1, 0, "ab", "c") != keyed_standard_normal(1, 0, "a", "bc"));
}

TEST_CASE("keyed normals look standard normal") {
  const int n = 200000;
  double sum = 0, sum_sq = 0;
  int within_one = 0;
  for (int i = 0; i < n; ++i) {
    const double g = keyed_standard_normal(7, static_cast<std::uint64_t>(i), "g", "m");
    CHECK(std::isfinite(g));
    sum += g;
    sum_sq += g * g;
    if (std::abs(g) <= 1.0) ++within_one;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs(var - 1.0) < 0.02);
  CHECK(std::abs(within_one / double(n) - 0.6827) < 0.005);
}
