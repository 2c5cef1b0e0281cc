#pragma once

#include <cstdint>

namespace rhombiflip {

// splitmix64; fixed algorithm so seeded runs reproduce across platforms.
struct Rng {
    std::uint64_t s;

    explicit Rng(std::uint64_t seed) : s(seed) {}

    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) {
        std::uint64_t lim = ~0ull - ~0ull % n;
        std::uint64_t x;
        do { x = next(); } while (x >= lim);
        return x % n;
    }
};

}  // namespace rhombiflip
