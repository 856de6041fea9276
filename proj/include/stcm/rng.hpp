#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "stcm/types.hpp"

namespace stcm {

/// Counter-based random stream. Identical (seed, stream_id) pairs produce
/// identical sample sequences, independent of thread count or call site, so
/// Monte Carlo runs are reproducible under any work partitioning.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id) {
        state_ = mix(seed + 0x9e3779b97f4a7c15ULL) ^ mix(stream_id + 0xd1b54a32d192ed03ULL);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform double strictly inside (0, 1).
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; the second variate of each pair is cached.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(next_unit()));
        const double a = 2.0 * std::numbers::pi * next_unit();
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Circularly symmetric complex Gaussian CN(0, variance).
    cplx next_cn(double variance) {
        const double s = std::sqrt(0.5 * variance);
        const double re = s * next_gaussian();
        const double im = s * next_gaussian();
        return {re, im};
    }

    /// Top n bits of one 64-bit draw, n in [0, 32].
    std::uint32_t next_bits(int n) {
        if (n <= 0) return 0;
        return static_cast<std::uint32_t>(next_u64() >> (64 - n));
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Stream id for one simulated block at one SNR point.
inline std::uint64_t make_stream_id(std::uint32_t snr_index, std::uint64_t block_index) {
    return (static_cast<std::uint64_t>(snr_index) << 48) ^ block_index;
}

} // namespace stcm
