#pragma once

#include <span>

#include "stcm/codec.hpp"

namespace stcm {

enum class DetectorKind { BruteForce, Conditional };

struct Detection {
    Codeword decided;
    long long metric_count = 0; // decision-metric accounting for this detector
};

/// Metric-calculation count of a detector on one codeword decision:
/// brute force evaluates the full codeword set (Alamouti's orthogonal ML is
/// counted as 2Q); the conditional detector needs 2^(2M+1)Q (scheme 1),
/// 2^(M+1)Q (scheme 2) or 2Q (Alamouti).
long long ml_metric_count(const SchemeConfig& cfg, DetectorKind kind);

/// Exact ML over the enumerated codeword set; ties go to the lowest index.
Detection detect_bruteforce(const CMatrix& y, const ExtendedChannel& h, const SchemeConfig& cfg);

/// Variant reusing a caller-held codeword table (must be in bit-block order).
Detection detect_bruteforce(const CMatrix& y, const ExtendedChannel& h, const SchemeConfig& cfg,
                            std::span<const Codeword> codewords);

/// Reduced-complexity conditional ML for schemes whose equivalent channel
/// columns are orthogonal (scheme 1, scheme 2, Alamouti). Per admissible
/// state tuple, x1 and x2 are detected independently by matched-filter
/// projection onto the constellation; decisions equal brute force on every
/// input. Throws std::invalid_argument for other schemes (scheme 3 does not
/// satisfy the orthogonality).
Detection detect_stcm_conditional(const CMatrix& y, const ExtendedChannel& h,
                                  const SchemeConfig& cfg);

/// Orthogonal ML decoding of the 2 x R Alamouti STBC: the single-state
/// special case of the conditional detector. h holds the two antenna columns.
Detection detect_alamouti(const CMatrix& y, const CMatrix& h, const Constellation& constellation);

} // namespace stcm
