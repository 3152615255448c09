#pragma once

#include <cstdint>

namespace quigs {

// Counter-based pseudo-random stream (splitmix64 finalizer over an
// incrementing counter). Streams are derived from (master_seed, stream_index)
// so parallel workers can draw independently and results stay reproducible
// regardless of scheduling. Output is platform-independent; no libstdc++
// distributions are involved.
class RngStream {
public:
    explicit RngStream(std::uint64_t master_seed, std::uint64_t stream_index = 0)
        : counter_(mix(master_seed + 0x9E3779B97F4A7C15ULL) ^
                   mix(stream_index + 0xD2B74407B1CE6E93ULL)) {}

    std::uint64_t next_u64() {
        counter_ += 0x9E3779B97F4A7C15ULL;
        return mix(counter_);
    }

    // Uniform double in [0, 1), 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bit() { return (next_u64() >> 63) != 0; }

    // UniformRandomBitGenerator interface.
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ULL; }
    result_type operator()() { return next_u64(); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t counter_;
};

}  // namespace quigs
