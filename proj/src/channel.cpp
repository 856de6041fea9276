#include "stcm/channel.hpp"

#include <stdexcept>
#include <string>

namespace stcm {

void fill_extended_channel(ExtendedChannel& h, RngStream& rng) {
    for (int c = 0; c < h.cols(); ++c)
        for (int r = 0; r < h.rows(); ++r)
            h(r, c) = rng.next_cn(1.0);
}

ExtendedChannel draw_extended_channel(int rx, int cols, RngStream& rng) {
    if (rx < 1 || cols < 1)
        throw std::invalid_argument("draw_extended_channel: rx and cols must be >= 1");
    ExtendedChannel h(rx, cols);
    fill_extended_channel(h, rng);
    return h;
}

void add_awgn_inplace(CMatrix& signal, double n0, RngStream& rng) {
    if (!(n0 > 0.0))
        throw std::invalid_argument("add_awgn: noise spectral density N0 must be positive, got " +
                                    std::to_string(n0));
    for (int c = 0; c < signal.cols(); ++c)
        for (int r = 0; r < signal.rows(); ++r)
            signal(r, c) += rng.next_cn(n0);
}

CMatrix add_awgn(const CMatrix& signal, double n0, RngStream& rng) {
    CMatrix out = signal;
    add_awgn_inplace(out, n0, rng);
    return out;
}

} // namespace stcm
