#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

namespace gsr {

/// Membership mask over a carrier of at most 64 elements; bit i is element i.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxCarrier = 64;

constexpr Mask bit(std::size_t i) noexcept { return Mask{1} << i; }

constexpr Mask full_mask(std::size_t n) noexcept
{
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr bool contains(Mask m, std::size_t i) noexcept { return (m >> i) & 1U; }

constexpr bool is_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

constexpr std::size_t popcount(Mask m) noexcept
{
    return static_cast<std::size_t>(std::popcount(m));
}

constexpr std::size_t lowest(Mask m) noexcept
{
    return static_cast<std::size_t>(std::countr_zero(m));
}

/// Calls fn(i) for every set bit, lowest first.
template <typename Fn>
constexpr void for_each_bit(Mask m, Fn&& fn)
{
    while (m != 0) {
        fn(lowest(m));
        m &= m - 1;
    }
}

} // namespace gsr
