#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stcm/codec.hpp"

namespace stcm {

/// One pairwise error event (Z, Zhat): the nonzero eigenvalues of the
/// difference Gram matrix, its rank D, and the bit errors of the event.
struct PairwiseEvent {
    double lambda[2] = {0.0, 0.0}; // descending, clamped at 0
    int d = 0;                     // rank: 0, 1 or 2
    int bit_errors = 0;
    double trace = 0.0;
};

/// Eigenvalues come from the 2x2 (or 1x1) Gram of the codeword difference in
/// closed form; rank uses a 1e-9 tolerance relative to the trace.
PairwiseEvent pairwise_eigs(const Codeword& z, const Codeword& zhat, const SchemeConfig& cfg);

/// Average pairwise error probability over Rayleigh fading,
/// (1/pi) * integral over [0, pi/2] of prod_d (1 + lambda_d/(4 N0 sin^2))^-R,
/// by the fixed 64-node Gauss-Legendre rule. Requires d >= 1.
double upep_stcm(const PairwiseEvent& event, int rx, double n0);

/// Single-distance form (sin^2 / (sin^2 + d^2/(4 N0)))^R used by the
/// one-slot schemes; identical to upep_stcm with one eigenvalue.
double upep_mbm(double dist_sq, int rx, double n0);

/// Eigenvalue classes of all ordered codeword pairs with their accumulated
/// bit-error weights. SNR-independent, so one spectrum prices a whole sweep.
struct PairSpectrum {
    struct Entry {
        double lambda1 = 0.0, lambda2 = 0.0;
        int d = 0;
        double weight = 0.0; // sum of bit errors over the pairs in this class
    };
    std::vector<Entry> entries; // deterministic order
    std::size_t codewords = 0;
    int bits = 0;
    bool two_slot = false;
    int min_rank = 0;
};

PairSpectrum pair_spectrum(const SchemeConfig& cfg, std::size_t cap = kDefaultEnumerationCap);

double abep_from_spectrum(const PairSpectrum& spectrum, int rx, double n0);

struct AbepOptions {
    std::size_t enumeration_cap = kDefaultEnumerationCap;
    bool sampling = false;            // pair-sampling fallback past the cap
    std::size_t sample_pairs = 1'000'000;
    std::uint64_t sample_seed = 0x57434d31u;
};

struct AbepResult {
    double bound = 0.0;
    double ci95 = 0.0;   // 95% half-width, nonzero only when sampled
    bool sampled = false;
};

/// Union bound on the average bit error probability: the double codeword sum
/// of UPEP weighted by bit errors, normalized per transmitted bit.
AbepResult abep_bound(const SchemeConfig& cfg, double n0, const AbepOptions& opts = {});

/// Two-slot schemes only (STCM 1-3, Alamouti).
AbepResult abep_bound_stcm(const SchemeConfig& cfg, double n0, const AbepOptions& opts = {});

/// MBM bound: for Q = 1 the symmetry shortcut with reference vector e_1 and
/// all pairwise distances 2; for Q > 1 full enumeration. M = 0 degenerates
/// to the classical SIMO scheme.
double abep_bound_mbm(int mirrors, int order, int rx, double n0);

/// Minimum difference-Gram rank over all distinct codeword pairs.
int diversity_min(const SchemeConfig& cfg, std::size_t cap = kDefaultEnumerationCap);

/// Rate / transmit diversity / ML complexity comparison for all schemes at
/// the given (M, Q, T). The STBC-SM row uses C = floor(log2(binom(T,2))).
struct TradeoffRow {
    std::string scheme;
    double data_rate = 0.0;     // eta, bpcu
    int tx_diversity = 0;       // D_min
    long long complexity = 0;   // ML decoding metric calculations
    std::string formula;
};

std::vector<TradeoffRow> tradeoff_table(int mirrors, int order, int tx);

} // namespace stcm
