#pragma once

#include <cstdint>

namespace fso {

// SplitMix64 (Vigna 2015). 64-bit state, fixed increment, passes BigCrush.
// Every generator method consumes exactly one raw draw, so replaying a
// stream from the same seed always yields the same sequence regardless of
// which convenience method is called.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 mantissa bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        // Multiply-shift mapping: one draw per call, negligible bias for
        // the small bounds used here.
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool next_bernoulli(double p) { return next_unit() < p; }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

// Named substreams derived from one master seed. A substream's sequence
// depends only on (master_seed, tag index), so consumers that draw from
// different streams never perturb each other.
struct RngStreams {
    std::uint64_t master_seed{0};
    SplitMix64 resource_placement;
    SplitMix64 expertise;
    SplitMix64 activities;
    SplitMix64 sickness;
    SplitMix64 strategy_choice;
    SplitMix64 movement;

    explicit RngStreams(std::uint64_t master);
};

} // namespace fso
