#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace ifr::rng {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

/// Philox4x32 with 10 rounds (Salmon et al., Random123). Stateless: the
/// output is a bijection of the counter for a fixed key.
Counter philox4x32_10(Counter counter, Key key);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

/// Standard normal variate addressed by (seed, trial, group, member).
///
/// key     = {lo32(seed), hi32(seed)}
/// h       = fnv1a64(group + '\x1f' + member)
/// counter = {lo32(trial), hi32(trial), lo32(h), hi32(h)}
/// x       = philox4x32_10(counter, key)
/// u1      = ((x0:x1 >> 11) + 1) * 2^-53     in (0, 1]
/// u2      = (x2:x3 >> 11) * 2^-53           in [0, 1)
/// result  = sqrt(-2 ln u1) * cos(2 pi u2)   (Box-Muller, first branch)
double keyed_standard_normal(std::uint64_t seed, std::uint64_t trial, std::string_view group,
                             std::string_view member);

}  // namespace ifr::rng
