#pragma once

#include <cstdint>
#include <string_view>

namespace hamq {

/// SplitMix64 stream. Used wherever reproducibility must not depend on the
/// platform's distribution implementations or on scheduling: a stream can be
/// derived per (seed, label, index), so any evaluation order yields identical
/// draws.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53 significant bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + next_unit() * (hi - lo); }

    /// Uniform integer in [0, n]; n is expected to be tiny (power exponents).
    unsigned uniform_int(unsigned n) {
        return static_cast<unsigned>(next_u64() % (static_cast<std::uint64_t>(n) + 1));
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Independent stream for sample `index` of the stream named `label` under
/// `seed`. Identical on every platform and under any parallel schedule.
inline SplitMix64 substream(std::uint64_t seed, std::string_view label, std::uint64_t index) {
    const std::uint64_t h = fnv1a64(label);
    return SplitMix64(mix64(seed ^ h) ^ mix64(index + 0x9e3779b97f4a7c15ull));
}

}  // namespace hamq
