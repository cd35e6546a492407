#pragma once

#include <cstdint>
#include <vector>

namespace cosbench {

// splitmix64 step; the core of every random draw in the project.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Mixes any number of 64-bit words into one seed.
inline uint64_t mix_seed(uint64_t seed) { return seed; }

template <typename... Rest>
uint64_t mix_seed(uint64_t seed, uint64_t next, Rest... rest) {
    uint64_t s = seed + 0x632be59bd9b4e019ULL;
    uint64_t mixed = splitmix64(s) ^ (next * 0xff51afd7ed558ccdULL);
    return mix_seed(splitmix64(mixed), rest...);
}

// Deterministic RNG with hand-rolled distributions so generated datasets are
// identical across compilers and platforms (std:: distributions are
// implementation-defined).
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() { return splitmix64(state_); }

    // Unbiased draw in [0, n) by rejection sampling.
    uint64_t below(uint64_t n) {
        if (n <= 1) return 0;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return x % n;
    }

    // Inclusive integer range.
    int range(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next_u64() & 1) != 0; }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

} // namespace cosbench
