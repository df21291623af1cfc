#pragma once

#include <cstdint>

namespace tricolor {

// SplitMix64 finalizer (Stafford mix 13). Bijective on 64-bit words with
// full avalanche; every deterministic random decision in the library is
// derived from chains of this mixer, so results depend only on the seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Folds one word into a running hash. The golden-ratio increment keeps
// repeated absorption of equal words from fixing the state.
constexpr std::uint64_t absorb(std::uint64_t h, std::uint64_t w) {
    return mix64((h + 0x9e3779b97f4a7c15ULL) ^ w);
}

// Top 53 bits as a double in [0, 1).
constexpr double to_unit(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Stream labels so different consumers of one user seed decorrelate.
namespace seedtag {
inline constexpr std::uint64_t cell = 1;
inline constexpr std::uint64_t trial = 2;
inline constexpr std::uint64_t scan_point = 3;
inline constexpr std::uint64_t bootstrap = 4;
inline constexpr std::uint64_t perm_cell = 5;
}  // namespace seedtag

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    return absorb(absorb(0x7473ab1cd67e90f3ULL, seed), tag);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag,
                                    std::uint64_t index) {
    return absorb(derive_seed(seed, tag), index);
}

}  // namespace tricolor
