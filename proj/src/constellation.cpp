#include "stcm/constellation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace stcm {

namespace {

bool is_pow2(int v) { return v > 0 && (v & (v - 1)) == 0; }

int log2i(int v) { return std::countr_zero(static_cast<unsigned>(v)); }

std::uint32_t gray(std::uint32_t v) { return v ^ (v >> 1); }

// Points at exact multiples of pi/2 are snapped so BPSK/QPSK come out exact.
cplx unit_circle_point(int q, int order) {
    if ((4LL * q) % order == 0) {
        switch ((4 * q) / order) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double angle = 2.0 * std::numbers::pi * q / order;
    return {std::cos(angle), std::sin(angle)};
}

Constellation build_psk(int order) {
    Constellation c;
    c.kind = ModKind::Psk;
    c.order = order;
    c.points.resize(order);
    c.labels.resize(order);
    c.pos_of_label.resize(order);
    for (int q = 0; q < order; ++q) {
        c.points[q] = unit_circle_point(q, order);
        c.labels[q] = gray(static_cast<std::uint32_t>(q));
        c.pos_of_label[c.labels[q]] = static_cast<std::uint32_t>(q);
    }
    return c;
}

Constellation build_qam(int order) {
    const int b = log2i(order);
    const int bits_re = (b + 1) / 2;
    const int bits_im = b / 2;
    const int w_re = 1 << bits_re;
    const int w_im = 1 << bits_im;

    Constellation c;
    c.kind = ModKind::Qam;
    c.order = order;
    c.grid_re = w_re;
    c.grid_im = w_im;
    // odd-integer grid {..,-3,-1,1,3,..} has per-axis mean square (w^2-1)/3
    const double energy = (static_cast<double>(w_re) * w_re - 1.0 + static_cast<double>(w_im) * w_im - 1.0) / 3.0;
    c.scale = 1.0 / std::sqrt(energy);

    c.points.resize(order);
    c.labels.resize(order);
    c.pos_of_label.resize(order);
    for (int i = 0; i < w_re; ++i) {
        for (int j = 0; j < w_im; ++j) {
            const int pos = i * w_im + j;
            c.points[pos] = cplx((2.0 * i - (w_re - 1)) * c.scale,
                                 (2.0 * j - (w_im - 1)) * c.scale);
            c.labels[pos] = (gray(static_cast<std::uint32_t>(i)) << bits_im) |
                             gray(static_cast<std::uint32_t>(j));
            c.pos_of_label[c.labels[pos]] = static_cast<std::uint32_t>(pos);
        }
    }
    return c;
}

int clampi(int v, int lo, int hi) { return std::min(std::max(v, lo), hi); }

} // namespace

int Constellation::bits() const { return order > 1 ? log2i(order) : 0; }

double Constellation::average_energy() const {
    double e = 0.0;
    for (const cplx& p : points) e += std::norm(p);
    return e / static_cast<double>(points.size());
}

std::size_t Constellation::nearest_index(cplx p) const {
    if (kind == ModKind::Psk) {
        if (order == 2) return p.real() >= 0.0 ? 0 : 1;
        const double sector = 2.0 * std::numbers::pi / order;
        long q = std::lround(std::atan2(p.imag(), p.real()) / sector);
        q %= order;
        if (q < 0) q += order;
        return static_cast<std::size_t>(q);
    }
    const int i = clampi(static_cast<int>(std::lround((p.real() / scale + (grid_re - 1)) / 2.0)), 0, grid_re - 1);
    const int j = clampi(static_cast<int>(std::lround((p.imag() / scale + (grid_im - 1)) / 2.0)), 0, grid_im - 1);
    return static_cast<std::size_t>(i) * grid_im + j;
}

Constellation build_constellation(ModKind kind, int order) {
    if (!is_pow2(order) || order < 2)
        throw std::invalid_argument("constellation order must be a power of two >= 2, got Q=" +
                                    std::to_string(order));
    if (kind == ModKind::Psk) return build_psk(order);

    const int b = log2i(order);
    const bool square = (b % 2) == 0;
    if (!square && order != 8)
        throw std::invalid_argument("unsupported constellation (QAM, Q=" + std::to_string(order) +
                                    "): only square sizes {4,16,64,...} and rectangular 8-QAM");
    return build_qam(order);
}

cplx bits_to_symbol(const BitBlock& segment, const Constellation& c) {
    if (segment.length() != c.bits())
        throw std::invalid_argument("bits_to_symbol: segment length " +
                                    std::to_string(segment.length()) + " != log2(Q) = " +
                                    std::to_string(c.bits()));
    return c.point_of_label(segment.value());
}

BitBlock symbol_to_bits(cplx x, const Constellation& c) {
    return BitBlock::from_value(c.labels[c.nearest_index(x)], c.bits());
}

int bits_to_state_index(const BitBlock& segment) {
    return 1 + static_cast<int>(segment.value());
}

const char* mod_kind_name(ModKind kind) {
    return kind == ModKind::Psk ? "psk" : "qam";
}

} // namespace stcm
