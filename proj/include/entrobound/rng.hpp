/*
 * SplitMix64: counter-based generator with an avalanche finalizer.
 * Streams derive from (seed, stream index) alone, so campaign trials
 * reproduce bit-for-bit no matter how they are scheduled across threads.
 */
#pragma once

#include <complex>
#include <cstdint>

namespace entrobound {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t avalanche(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Independent stream for trial k of a campaign seeded with `seed`.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(avalanche(seed ^ avalanche(index + 0x9E3779B97F4A7C15ULL)));
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return avalanche(state_);
    }

    // [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // (0, 1]
    double uniform_positive() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    std::size_t uniform_index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    // Box-Muller; the paired value is cached.
    double gaussian() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = uniform_positive();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(angle);
        has_cached_ = true;
        return r * std::cos(angle);
    }

    std::complex<double> complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace entrobound
