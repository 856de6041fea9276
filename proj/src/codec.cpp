#include "stcm/codec.hpp"

#include <stdexcept>
#include <string>

namespace stcm {

namespace {

struct BitReader {
    std::uint32_t value;
    int left;

    std::uint32_t take(int width) {
        left -= width;
        return (value >> left) & ((width == 32 ? 0 : (1u << width)) - 1u);
    }
};

struct BitWriter {
    std::uint32_t value = 0;

    void put(std::uint32_t field, int width) { value = (value << width) | field; }
};

cplx symbol_or_one(const SchemeConfig& cfg, std::uint32_t label) {
    return cfg.order > 1 ? cfg.constellation.point_of_label(label) : cplx{1.0, 0.0};
}

} // namespace

Codeword encode(std::uint32_t block_value, const SchemeConfig& cfg) {
    const int b = cfg.bits_per_codeword();
    if (block_value >> b)
        throw std::invalid_argument("encode: block value out of range for " +
                                    std::to_string(b) + " bits");
    const int mb = cfg.mirrors;
    const int qb = cfg.sym_bits();
    BitReader in{block_value, b};

    Codeword cw;
    cw.index = block_value;
    switch (cfg.scheme) {
        case Scheme::ClassicalSimo:
            cw.x1 = symbol_or_one(cfg, in.take(qb));
            break;
        case Scheme::Ssk:
            cw.k = 1 + static_cast<int>(in.take(mb));
            break;
        case Scheme::MbmSimo:
            cw.k = 1 + static_cast<int>(in.take(mb));
            cw.x1 = symbol_or_one(cfg, in.take(qb));
            break;
        case Scheme::MbmMimo:
            cw.k = 1 + static_cast<int>(in.take(mb));
            cw.l = 1 + static_cast<int>(in.take(mb));
            cw.x1 = symbol_or_one(cfg, in.take(qb));
            cw.x2 = symbol_or_one(cfg, in.take(qb));
            break;
        case Scheme::Alamouti:
            cw.x1 = symbol_or_one(cfg, in.take(qb));
            cw.x2 = symbol_or_one(cfg, in.take(qb));
            break;
        case Scheme::Stcm1:
            cw.k = 1 + static_cast<int>(in.take(mb));
            cw.l = 1 + static_cast<int>(in.take(mb));
            cw.m = cw.k;
            cw.n = cw.l;
            cw.x1 = symbol_or_one(cfg, in.take(qb));
            cw.x2 = symbol_or_one(cfg, in.take(qb));
            break;
        case Scheme::Stcm2:
            cw.k = 1 + static_cast<int>(in.take(mb));
            cw.l = cw.m = cw.n = cw.k;
            cw.x1 = symbol_or_one(cfg, in.take(qb));
            cw.x2 = symbol_or_one(cfg, in.take(qb));
            break;
        case Scheme::Stcm3:
            cw.k = 1 + static_cast<int>(in.take(mb));
            cw.l = 1 + static_cast<int>(in.take(mb));
            cw.m = cw.l;
            cw.n = cw.k;
            cw.x1 = symbol_or_one(cfg, in.take(qb));
            cw.x2 = symbol_or_one(cfg, in.take(qb));
            break;
    }
    return cw;
}

Codeword encode(const BitBlock& bits, const SchemeConfig& cfg) {
    if (bits.length() != cfg.bits_per_codeword())
        throw std::invalid_argument("encode: bit block length " + std::to_string(bits.length()) +
                                    " != bits per codeword " +
                                    std::to_string(cfg.bits_per_codeword()));
    return encode(bits.value(), cfg);
}

BitBlock decode_bits(const Codeword& cw, const SchemeConfig& cfg) {
    return BitBlock::from_value(cw.index, cfg.bits_per_codeword());
}

std::uint32_t pack_block(const SchemeConfig& cfg, int k, int l,
                         std::uint32_t x1_label, std::uint32_t x2_label) {
    const int mb = cfg.mirrors;
    const int qb = cfg.sym_bits();
    BitWriter out;
    switch (cfg.scheme) {
        case Scheme::ClassicalSimo:
            out.put(x1_label, qb);
            break;
        case Scheme::Ssk:
            out.put(static_cast<std::uint32_t>(k - 1), mb);
            break;
        case Scheme::MbmSimo:
            out.put(static_cast<std::uint32_t>(k - 1), mb);
            out.put(x1_label, qb);
            break;
        case Scheme::MbmMimo:
        case Scheme::Stcm1:
        case Scheme::Stcm3:
            out.put(static_cast<std::uint32_t>(k - 1), mb);
            out.put(static_cast<std::uint32_t>(l - 1), mb);
            out.put(x1_label, qb);
            out.put(x2_label, qb);
            break;
        case Scheme::Alamouti:
            out.put(x1_label, qb);
            out.put(x2_label, qb);
            break;
        case Scheme::Stcm2:
            out.put(static_cast<std::uint32_t>(k - 1), mb);
            out.put(x1_label, qb);
            out.put(x2_label, qb);
            break;
    }
    return out.value;
}

std::vector<Codeword> enumerate_codewords(const SchemeConfig& cfg, std::size_t cap) {
    const int b = cfg.bits_per_codeword();
    const std::size_t count = std::size_t{1} << b;
    if (count > cap)
        throw std::length_error("codeword enumeration too large (2^" + std::to_string(b) + " = " +
                                std::to_string(count) + " > cap " + std::to_string(cap) +
                                "); use the sampled ABEP bound or raise the cap");
    std::vector<Codeword> out;
    out.reserve(count);
    for (std::size_t v = 0; v < count; ++v)
        out.push_back(encode(static_cast<std::uint32_t>(v), cfg));
    return out;
}

int column_entries(const Codeword& cw, const SchemeConfig& cfg, int slot,
                   std::array<SparseEntry, 2>& out) {
    if (cfg.two_slot()) {
        const int half = cfg.states();
        if (slot == 0) {
            out[0] = {cw.k - 1, cw.x1};
            out[1] = {half + cw.l - 1, cw.x2};
        } else {
            out[0] = {cw.m - 1, -std::conj(cw.x2)};
            out[1] = {half + cw.n - 1, std::conj(cw.x1)};
        }
        return 2;
    }
    if (cfg.scheme == Scheme::MbmMimo) {
        out[0] = {cw.k - 1, cw.x1};
        out[1] = {cfg.states() + cw.l - 1, cw.x2};
        return 2;
    }
    out[0] = {cw.k - 1, cw.x1};
    return 1;
}

CMatrix codeword_matrix(const Codeword& cw, const SchemeConfig& cfg) {
    CMatrix z(cfg.ext_cols(), cfg.slots());
    std::array<SparseEntry, 2> entries;
    for (int slot = 0; slot < cfg.slots(); ++slot) {
        const int cnt = column_entries(cw, cfg, slot, entries);
        for (int e = 0; e < cnt; ++e) z(entries[e].row, slot) += entries[e].val;
    }
    return z;
}

void transmit_into(CMatrix& y, const Codeword& cw, const SchemeConfig& cfg,
                   const ExtendedChannel& h) {
    std::array<SparseEntry, 2> entries;
    for (int slot = 0; slot < cfg.slots(); ++slot) {
        const int cnt = column_entries(cw, cfg, slot, entries);
        for (int r = 0; r < h.rows(); ++r) {
            cplx acc{0.0, 0.0};
            for (int e = 0; e < cnt; ++e) acc += h(r, entries[e].row) * entries[e].val;
            y(r, slot) = acc;
        }
    }
}

CMatrix transmit(const Codeword& cw, const SchemeConfig& cfg, const ExtendedChannel& h) {
    if (h.cols() != cfg.ext_cols() || h.rows() != cfg.rx)
        throw std::invalid_argument("transmit: channel is " + std::to_string(h.rows()) + "x" +
                                    std::to_string(h.cols()) + ", scheme expects " +
                                    std::to_string(cfg.rx) + "x" + std::to_string(cfg.ext_cols()));
    CMatrix y(h.rows(), cfg.slots());
    transmit_into(y, cw, cfg, h);
    return y;
}

CMatrix build_equivalent_channel(const ExtendedChannel& h, int k, int l, int m, int n) {
    const int half = h.cols() / 2;
    for (int idx : {k, l, m, n})
        if (idx < 1 || idx > half)
            throw std::invalid_argument("build_equivalent_channel: state index " +
                                        std::to_string(idx) + " outside [1, " +
                                        std::to_string(half) + "]");
    CMatrix ceq(2 * h.rows(), 2);
    for (int r = 0; r < h.rows(); ++r) {
        ceq(2 * r, 0) = h(r, k - 1);
        ceq(2 * r, 1) = h(r, half + l - 1);
        ceq(2 * r + 1, 0) = std::conj(h(r, half + n - 1));
        ceq(2 * r + 1, 1) = -std::conj(h(r, m - 1));
    }
    return ceq;
}

} // namespace stcm
