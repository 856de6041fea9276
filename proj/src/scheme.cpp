#include "stcm/scheme.hpp"

#include <bit>
#include <stdexcept>

namespace stcm {

namespace {

bool is_pow2(int v) { return v > 0 && (v & (v - 1)) == 0; }

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
    throw std::invalid_argument("invalid scheme config: field '" + field + "': " + msg);
}

} // namespace

int SchemeConfig::tx() const {
    switch (scheme) {
        case Scheme::ClassicalSimo:
        case Scheme::MbmSimo: return 1;
        case Scheme::Ssk: return states();
        default: return 2;
    }
}

int SchemeConfig::slots() const {
    switch (scheme) {
        case Scheme::Alamouti:
        case Scheme::Stcm1:
        case Scheme::Stcm2:
        case Scheme::Stcm3: return 2;
        default: return 1;
    }
}

int SchemeConfig::ext_cols() const {
    switch (scheme) {
        case Scheme::ClassicalSimo: return 1;
        case Scheme::Ssk:
        case Scheme::MbmSimo: return states();
        default: return 2 * states(); // 2^(M+1), both transmit antennas
    }
}

int SchemeConfig::bits_per_codeword() const {
    const int q = sym_bits();
    switch (scheme) {
        case Scheme::ClassicalSimo: return q;
        case Scheme::Ssk: return mirrors;
        case Scheme::MbmSimo: return mirrors + q;
        case Scheme::MbmMimo: return 2 * mirrors + 2 * q;
        case Scheme::Alamouti: return 2 * q;
        case Scheme::Stcm1:
        case Scheme::Stcm3: return 2 * mirrors + 2 * q;
        case Scheme::Stcm2: return mirrors + 2 * q;
    }
    return 0;
}

double SchemeConfig::bpcu() const {
    return static_cast<double>(bits_per_codeword()) / slots();
}

double SchemeConfig::energy_per_codeword() const {
    switch (scheme) {
        case Scheme::ClassicalSimo:
        case Scheme::Ssk:
        case Scheme::MbmSimo: return 1.0;
        case Scheme::MbmMimo: return 2.0;
        default: return 4.0; // two antennas, two slots
    }
}

SchemeConfig make_config(Scheme scheme, int mirrors, int order, int rx, ModKind mod) {
    SchemeConfig cfg;
    cfg.scheme = scheme;
    cfg.mirrors = mirrors;
    cfg.order = order;
    cfg.rx = rx;
    cfg.mod = mod;

    if (rx < 1) fail("rx", "receive antenna count must be >= 1");
    if (mirrors < 0 || mirrors > 20) fail("mirrors", "M must be in [0, 20]");
    if (order < 1) fail("order", "Q must be >= 1");

    switch (scheme) {
        case Scheme::ClassicalSimo:
            if (mirrors != 0) fail("mirrors", "classical SIMO has no RF mirrors, M must be 0");
            if (order < 2) fail("order", "classical SIMO needs Q >= 2");
            break;
        case Scheme::Ssk:
            if (order != 1) fail("order", "SSK transmits no constellation symbol, Q must be 1");
            if (mirrors < 1) fail("mirrors", "SSK needs at least 2 antennas (M = log2(T) >= 1)");
            break;
        case Scheme::MbmSimo:
        case Scheme::MbmMimo:
            if (mirrors < 1) fail("mirrors", "MBM needs M >= 1 RF mirrors");
            break;
        case Scheme::Alamouti:
            if (mirrors != 0) fail("mirrors", "Alamouti STBC has no RF mirrors, M must be 0");
            if (order < 2) fail("order", "Alamouti needs Q >= 2");
            break;
        case Scheme::Stcm1:
        case Scheme::Stcm2:
        case Scheme::Stcm3:
            if (mirrors < 1) fail("mirrors", "STCM needs M >= 1 RF mirrors");
            if (order < 2) fail("order", "STCM needs Q >= 2");
            break;
    }

    if (order > 1) cfg.constellation = build_constellation(mod, order);
    if (cfg.bits_per_codeword() > 32) fail("mirrors/order", "bits per codeword exceeds 32");
    return cfg;
}

SchemeConfig make_ssk_config(int tx, int rx) {
    if (!is_pow2(tx) || tx < 2)
        throw std::invalid_argument("invalid scheme config: field 'tx': SSK antenna count must be a power of two >= 2");
    return make_config(Scheme::Ssk, std::countr_zero(static_cast<unsigned>(tx)), 1, rx);
}

ModKind default_mod_kind(int order) {
    if (order <= 2) return ModKind::Psk;
    const int b = std::countr_zero(static_cast<unsigned>(order));
    return (b % 2 == 0 || order == 8) ? ModKind::Qam : ModKind::Psk;
}

std::string scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::ClassicalSimo: return "simo";
        case Scheme::Ssk: return "ssk";
        case Scheme::MbmSimo: return "mbm-simo";
        case Scheme::MbmMimo: return "mbm-mimo";
        case Scheme::Alamouti: return "alamouti";
        case Scheme::Stcm1: return "stcm1";
        case Scheme::Stcm2: return "stcm2";
        case Scheme::Stcm3: return "stcm3";
    }
    return "?";
}

Scheme parse_scheme(const std::string& name) {
    if (name == "simo") return Scheme::ClassicalSimo;
    if (name == "ssk") return Scheme::Ssk;
    if (name == "mbm-simo" || name == "mbm") return Scheme::MbmSimo;
    if (name == "mbm-mimo") return Scheme::MbmMimo;
    if (name == "alamouti") return Scheme::Alamouti;
    if (name == "stcm1") return Scheme::Stcm1;
    if (name == "stcm2") return Scheme::Stcm2;
    if (name == "stcm3") return Scheme::Stcm3;
    throw std::invalid_argument("unknown scheme '" + name +
                                "' (expected one of: simo ssk mbm-simo mbm-mimo alamouti stcm1 stcm2 stcm3)");
}

} // namespace stcm
