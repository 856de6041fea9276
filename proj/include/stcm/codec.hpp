#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "stcm/channel.hpp"
#include "stcm/scheme.hpp"

namespace stcm {

inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 16;

/// One transmit codeword of any scheme. Channel-state indices are 1-based.
/// Single-slot schemes use k (and l, x2 for the two-antenna MBM variant);
/// the two-slot schemes realize the sparse transmit matrix
///   column 1: x1 at row k,  x2 at row 2^M + l
///   column 2: -x2* at row m, x1* at row 2^M + n.
struct Codeword {
    std::uint32_t index = 0; // encoded bit block, MSB first
    int k = 1, l = 1, m = 1, n = 1;
    cplx x1{1.0, 0.0};
    cplx x2{0.0, 0.0};
};

/// Maps a bit block (packed, MSB first) to its codeword. State-index fields
/// come first (natural binary), then Gray-labelled symbol fields.
Codeword encode(std::uint32_t block_value, const SchemeConfig& cfg);
Codeword encode(const BitBlock& bits, const SchemeConfig& cfg);

BitBlock decode_bits(const Codeword& cw, const SchemeConfig& cfg);

/// Rebuilds the packed bit block from decided indices and symbol labels.
std::uint32_t pack_block(const SchemeConfig& cfg, int k, int l,
                         std::uint32_t x1_label, std::uint32_t x2_label);

/// All 2^(bits-per-codeword) codewords in bit-block order. Throws
/// std::length_error when the count exceeds cap.
std::vector<Codeword> enumerate_codewords(const SchemeConfig& cfg,
                                          std::size_t cap = kDefaultEnumerationCap);

struct SparseEntry {
    int row = 0; // 0-based row of the transmit matrix
    cplx val;
};

/// Nonzero entries of one column (time slot) of the transmit matrix.
/// Returns the entry count (1 or 2).
int column_entries(const Codeword& cw, const SchemeConfig& cfg, int slot,
                   std::array<SparseEntry, 2>& out);

/// Dense transmit matrix: S x 1 vector or 2^(M+1) x 2 matrix.
CMatrix codeword_matrix(const Codeword& cw, const SchemeConfig& cfg);

/// Noiseless received signal (R x slots), computed through the sparse
/// structure at O(R) per slot.
CMatrix transmit(const Codeword& cw, const SchemeConfig& cfg, const ExtendedChannel& h);
void transmit_into(CMatrix& y, const Codeword& cw, const SchemeConfig& cfg,
                   const ExtendedChannel& h);

/// Equivalent 2R x 2 channel of one state quadruplet: per receive antenna r
/// the rows (h_{k,r}, h_{2^M+l,r}) and (h*_{2^M+n,r}, -h*_{m,r}).
/// For m=k, n=l (scheme 1) and k=l=m=n (scheme 2) the two columns are
/// orthogonal for every channel realization.
CMatrix build_equivalent_channel(const ExtendedChannel& h, int k, int l, int m, int n);

} // namespace stcm
