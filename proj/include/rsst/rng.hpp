#pragma once

#include <cstdint>

namespace rsst {

// SplitMix64 counter generator. Standard-library distributions are
// implementation-defined, so everything that must reproduce bit-identically
// across platforms (perturbation, synthetic lexicons, property-test inputs)
// draws from this instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Independent stream for one trial: reruns and parallel schedules see
    /// the same draws regardless of execution order.
    static Rng stream(std::uint64_t seed, std::uint64_t trial_index,
                      std::uint64_t stream_id = 0) {
        std::uint64_t s = seed;
        s = mix(s ^ (0x9E3779B97F4A7C15ULL * (trial_index + 1)));
        s = mix(s ^ (0xC2B2AE3D27D4EB4FULL * (stream_id + 1)));
        return Rng(s);
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform integer in [0, bound) via the multiply-shift reduction.
    std::uint32_t below(std::uint32_t bound) {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace rsst
