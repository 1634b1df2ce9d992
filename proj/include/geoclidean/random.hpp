// --------------------------------------------------------------------
// Seeded random streams and stable 64-bit hashing for seed derivation.
// --------------------------------------------------------------------
#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace geoclidean {

// Owned random stream. The engine sequence is pinned by the standard and the
// [0,1) mapping is explicit, so identical seeds give identical draws on every
// platform.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1), 53 bits of randomness.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // Uniform index in [0, n). n must be > 0 and small.
    std::size_t below(std::size_t n) {
        auto i = static_cast<std::size_t>(unit() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

private:
    std::mt19937_64 engine_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// FNV-1a; stable across builds unlike std::hash.
inline std::uint64_t hash_string(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    return splitmix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

}  // namespace geoclidean
