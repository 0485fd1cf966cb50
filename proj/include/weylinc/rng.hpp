#pragma once

#include <cstdint>

namespace weylinc {

/// SplitMix64 stream (Steele, Lea, Flood 2014).  Chosen as the reproducibility
/// contract of the toolkit: one 64-bit seed fully determines the stream, the
/// state transition is a single addition, and distinct seeds give independent
/// looking streams.  The algorithm identifier recorded in Provenance::rng is
/// "splitmix64".
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0,1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Derives a child seed for an auxiliary stream (second sequence of a
    /// slab experiment, cluster centers, ...).  Deterministic in (seed, tag).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t tag) {
        SplitMix64 g(seed ^ (tag * 0xA24BAED4963EE407ull));
        return g.next_u64();
    }

private:
    std::uint64_t state_;
};

}  // namespace weylinc
