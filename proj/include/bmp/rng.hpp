#ifndef BMP_RNG_HPP
#define BMP_RNG_HPP

#include <cstdint>
#include <random>

namespace bmp {

// splitmix64 step, used to derive independent per-trial seeds from one
// CLI-level seed so that best-of-T sequences are nested.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

}  // namespace bmp

#endif
