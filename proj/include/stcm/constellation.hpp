#pragma once

#include <cstdint>
#include <vector>

#include "stcm/types.hpp"

namespace stcm {

enum class ModKind { Psk, Qam };

/// Unit average energy signal set with Gray bit labels.
///
/// PSK places the Q points at angles 2*pi*q/Q with a binary-reflected Gray
/// code around the circle. QAM uses a rectangular odd-integer grid (square
/// for Q in {4,16,64,256}, 4x2 for Q=8) with an independent Gray code per
/// axis, scaled to unit average symbol energy.
struct Constellation {
    ModKind kind = ModKind::Psk;
    int order = 0; // Q

    std::vector<cplx> points;               // indexed by geometric position
    std::vector<std::uint32_t> labels;      // labels[pos] = Gray label of that point
    std::vector<std::uint32_t> pos_of_label;

    // QAM grid geometry, used by the O(1) slicer
    int grid_re = 0;
    int grid_im = 0;
    double scale = 1.0;

    int bits() const;

    cplx point_of_label(std::uint32_t label) const { return points[pos_of_label[label]]; }

    /// Index of the closest point: angle-sector rounding for PSK, per-axis
    /// rounding with clamping for QAM. Exact nearest-neighbour decision.
    std::size_t nearest_index(cplx p) const;

    double average_energy() const;
};

/// Builds the standard unit-energy constellation, deterministic in (kind, Q).
/// Throws std::invalid_argument for unsupported (kind, Q) combinations.
Constellation build_constellation(ModKind kind, int order);

/// Maps a label segment (length log2 Q) to its constellation point.
cplx bits_to_symbol(const BitBlock& segment, const Constellation& c);

/// Inverse of bits_to_symbol for points of the set.
BitBlock symbol_to_bits(cplx x, const Constellation& c);

/// Natural binary mapping of an M-bit segment to a channel-state index in [1, 2^M].
int bits_to_state_index(const BitBlock& segment);

const char* mod_kind_name(ModKind kind);

} // namespace stcm
