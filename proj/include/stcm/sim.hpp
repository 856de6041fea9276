#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stcm/analysis.hpp"
#include "stcm/detect.hpp"

namespace stcm {

/// Simulation halts at whichever limit is reached first.
struct StopRule {
    long long min_bit_errors = 200;
    long long max_bits = 100'000'000;
};

struct BerRecord {
    double snr_db = 0.0; // E_b/N_0
    long long bits = 0;
    long long errors = 0;
    double ber = 0.0;
    std::optional<double> theory; // ABEP union bound, when requested
    double elapsed_s = 0.0;
};

struct SimOptions {
    int workers = 0;              // 0: STCM_WORKERS env var, else hardware concurrency
    bool force_bruteforce = false;
    bool zero_noise = false;      // debug hook: skip the noise draw entirely
    bool attach_theory = false;
    AbepOptions abep{};
};

int resolve_workers(const SimOptions& opts);

/// Monte Carlo BER at one E_b/N_0 point. Blocks are processed in fixed-size
/// batches whose per-block random streams depend only on (seed, snr_index,
/// block index), so counts are bit-identical for any worker count.
BerRecord run_point(const SchemeConfig& cfg, double snr_db, const StopRule& stop,
                    std::uint64_t seed, std::uint32_t snr_index = 0, const SimOptions& opts = {});

/// Sweep over strictly increasing E_b/N_0 values; point i uses snr_index = i.
std::vector<BerRecord> run_sweep(const SchemeConfig& cfg, const std::vector<double>& snr_db,
                                 const StopRule& stop, std::uint64_t seed,
                                 const SimOptions& opts = {});

} // namespace stcm
