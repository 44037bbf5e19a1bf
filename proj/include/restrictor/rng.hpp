#pragma once

#include <cstdint>
#include <random>

namespace restrictor {

/// splitmix64 finaliser; used to derive independent child seeds.
inline std::uint64_t mix_seed(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Child seed for a named sub-computation (chain index, level, ...).
inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t tag)
{
    return mix_seed(mix_seed(parent) ^ (tag * 0xd1b54a32d192ed03ULL));
}

using Engine = std::mt19937_64;

inline Engine make_engine(std::uint64_t seed) { return Engine(mix_seed(seed)); }

// The standard distributions are implementation-defined; these two are
// spelled out so that a seed means the same thing on every toolchain.

/// Uniform integer in [0, bound), bound > 0.
inline std::uint64_t uniform_below(Engine & engine, std::uint64_t bound)
{
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = engine();
    while (x >= limit) x = engine();
    return x % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Engine & engine) { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

} // namespace restrictor
