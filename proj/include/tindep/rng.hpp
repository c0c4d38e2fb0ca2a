#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace tindep {

/// SplitMix64. Each draw:
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// uniform(b) is next() % b. shuffle is Fisher-Yates from the back, swapping
/// position i with uniform(i + 1).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t uniform(std::uint64_t bound) { return next() % bound; }

    /// Uniform integer in [lo, hi].
    int range(int lo, int hi) {
        return lo + static_cast<int>(uniform(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return uniform(den) < num; }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            auto j = static_cast<std::size_t>(uniform(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    /// Seed of trial `index` in a run seeded with `seed`: the first draw of
    /// SplitMix64(seed + index * 0x9E3779B97F4A7C15).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(seed + index * 0x9E3779B97F4A7C15ULL).next();
    }

private:
    std::uint64_t state_;
};

}  // namespace tindep
