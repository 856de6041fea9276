#pragma once

#include "stcm/rng.hpp"
#include "stcm/types.hpp"

namespace stcm {

/// R x S matrix of i.i.d. CN(0,1) fading gains; column i is the receive
/// vector of channel state i. S = 2^M for single-antenna schemes, 2^(M+1)
/// when two transmit antennas each provide 2^M states.
using ExtendedChannel = CMatrix;

/// Redraws all entries of an existing matrix, column by column.
void fill_extended_channel(ExtendedChannel& h, RngStream& rng);

ExtendedChannel draw_extended_channel(int rx, int cols, RngStream& rng);

/// signal + CN(0, n0) noise, input left unmodified. n0 must be positive.
CMatrix add_awgn(const CMatrix& signal, double n0, RngStream& rng);

void add_awgn_inplace(CMatrix& signal, double n0, RngStream& rng);

} // namespace stcm
