#ifndef NAMEFIX_RNG_HPP
#define NAMEFIX_RNG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace namefix {

// Platform-independent primitives. std::hash and the standard distributions
// are implementation-defined, so everything that feeds dataset artifacts
// goes through these instead.

inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Mixes a seed with an arbitrary key; used to derive per-record RNG streams
// from (global seed, file path, record ordinal).
inline std::uint64_t stable_hash(std::uint64_t seed, std::string_view key, std::uint64_t extra = 0) {
    std::uint64_t h = fnv1a64(key) ^ (seed * 0x9e3779b97f4a7c15ull) ^ (extra + 0x2545f4914f6cdd1dull);
    return splitmix64(h);
}

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64(state_); }

    // Unbiased draw in [0, n) by rejection.
    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % n;
    }

    double unit() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace namefix

#endif
