#ifndef BPLAB_RNG_HPP
#define BPLAB_RNG_HPP

#include <cstdint>
#include <cstring>
#include <random>

namespace bplab {

// Stream discipline for everything random in this library: std::mt19937_64
// seeded once, consumed through uniform53. mt19937_64 is bit-stable across
// platforms by the C++ standard, which the reproducibility contracts rely on.

inline double uniform53(std::mt19937_64& gen) {
    // 53-bit mantissa uniform in [0,1)
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t double_bits(double d) {
    std::uint64_t u;
    std::memcpy(&u, &d, sizeof u);
    return u;
}

// per-trial seed: base_seed xor-mixed with (n, p, trial index)
inline std::uint64_t trial_seed(std::uint64_t base, std::uint64_t n, double p,
                                std::uint64_t index) {
    std::uint64_t h = splitmix64(base ^ n);
    h = splitmix64(h ^ double_bits(p));
    return splitmix64(h ^ index);
}

} // namespace bplab

#endif
