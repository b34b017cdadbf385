#ifndef HMOTIF_RNG_HPP
#define HMOTIF_RNG_HPP

#include <cstdint>

namespace hmotif {

// SplitMix64. Draws are bit-identical across platforms and standard
// libraries; results for a fixed (seed, workers) pair reproduce everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n >= 1; Lemire multiply-shift, no modulo bias
    std::uint64_t bounded(std::uint64_t n) {
        while (true) {
            std::uint64_t x = next();
            unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
            std::uint64_t lo = static_cast<std::uint64_t>(m);
            if (lo >= n || lo >= std::uint64_t(-n) % n) // accept unless in the biased tail
                return static_cast<std::uint64_t>(m >> 64);
        }
    }

    // uniform double in [0, 1)
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Stream splitting: all randomness in the artifact flows from one top-level
// seed, expanded per (subsystem tag, stream index) through a SplitMix64 hash
// of the three words. Distinct (tag, index) pairs give independent streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t index) {
    Rng mix(base ^ (tag * 0xd6e8feb86659fd93ULL) ^ (index * 0xa0761d6478bd642fULL));
    mix.next();
    return mix.next();
}

namespace seed_tag {
inline constexpr std::uint64_t edge_sampler = 1;
inline constexpr std::uint64_t wedge_sampler = 2;
inline constexpr std::uint64_t randomizer = 3;
inline constexpr std::uint64_t memo_pin = 4;
} // namespace seed_tag

} // namespace hmotif

#endif
