#include "ifr/philox.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ifr::rng {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53;
constexpr std::uint32_t kMul1 = 0xCD9E8D57;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

inline Counter round(const Counter& c, const Key& k) {
  std::uint32_t hi0, lo0, hi1, lo1;
  mulhilo(kMul0, c[0], hi0, lo0);
  mulhilo(kMul1, c[2], hi1, lo1);
  return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

Counter philox4x32_10(Counter counter, Key key) {
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    counter = round(counter, key);
  }
  return counter;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double keyed_standard_normal(std::uint64_t seed, std::uint64_t trial, std::string_view group,
                             std::string_view member) {
  std::string address;
  address.reserve(group.size() + member.size() + 1);
  address.append(group).push_back('\x1f');
  address.append(member);
  const std::uint64_t h = fnv1a64(address);

  const Key key = {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  const Counter ctr = {static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                       static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  const Counter x = philox4x32_10(ctr, key);

  constexpr double kTwoPow53 = 9007199254740992.0;
  const std::uint64_t a = (static_cast<std::uint64_t>(x[0]) << 32) | x[1];
  const std::uint64_t b = (static_cast<std::uint64_t>(x[2]) << 32) | x[3];
  const double u1 = static_cast<double>((a >> 11) + 1) / kTwoPow53;
  const double u2 = static_cast<double>(b >> 11) / kTwoPow53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace ifr::rng
