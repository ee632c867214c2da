#pragma once

#include <cstdint>
#include <initializer_list>

namespace pktsched {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Child seed for (master, i, j, ...): each component is folded in through
/// splitmix64, so streams for different indices are unrelated.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) noexcept {
    std::uint64_t seed = splitmix64(master);
    for (std::uint64_t component : path) seed = splitmix64(seed ^ splitmix64(component + 0x632be59bd9b4e019ULL));
    return seed;
}

} // namespace pktsched
