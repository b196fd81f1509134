#pragma once

#include <cstdint>
#include <random>

namespace gradest {

/// Reproducibility contract: every stochastic operation in this library is a
/// pure function of an explicit 64-bit seed and must produce identical bits on
/// every platform. std::mt19937_64 is fully specified by the standard, but the
/// std distributions are not, so raw engine output is mapped to [0,1) here by
/// a fixed formula instead of std::uniform_real_distribution.

/// Stateless 64-bit mixer (splitmix64).
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives an independent stream seed from a base seed and an index
/// (e.g. a pixel index), so per-point randomness does not depend on
/// evaluation order.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(base + 0x9e3779b97f4a7c15ULL * (index + 1));
}

/// Uniform double in [0,1) from the top 53 bits of one engine draw.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

} // namespace gradest
