#pragma once

#include <cstdint>

namespace hoeffding {

// SplitMix64 (Steele/Lea/Flood splittable generator, Vigna's fixed-increment
// variant).  One 64-bit state word; serves both as the per-replication
// generator and as the mixing function that derives replication streams.
class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_double() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

// Seed for replication `counter` of a run seeded with `base`.  Pure function
// of (base, counter), so replications see identical streams no matter which
// worker executes them or in what order.
constexpr std::uint64_t stream_seed(std::uint64_t base, std::uint64_t counter) noexcept {
    SplitMix64 g(base + 0x9E3779B97F4A7C15ull * (counter + 1));
    return g.next();
}

}  // namespace hoeffding
