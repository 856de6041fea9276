#pragma once

#include <string>

#include "stcm/constellation.hpp"

namespace stcm {

enum class Scheme {
    ClassicalSimo, // 1xR, Q-ary symbols only
    Ssk,           // TxR, antenna index only
    MbmSimo,       // 1xR, M RF mirrors, optional Q-ary symbol
    MbmMimo,       // 2xR, per-antenna mirrors, two symbols in one slot
    Alamouti,      // 2xR orthogonal STBC, two slots
    Stcm1,         // STBC over channel states, m=k, n=l
    Stcm2,         // STBC over channel states, k=l=m=n
    Stcm3,         // STBC over channel states, m=l, n=k
};

/// Fully resolved transmission scheme. Build through make_config so the
/// parameter constraints are checked once, up front.
struct SchemeConfig {
    Scheme scheme = Scheme::MbmSimo;
    int mirrors = 0; // M per transmit antenna (log2 of antenna count for SSK)
    int order = 1;   // Q, 1 = index modulation only
    int rx = 1;      // R
    ModKind mod = ModKind::Psk;
    Constellation constellation; // empty when order == 1

    int states() const { return 1 << mirrors; } // 2^M
    int sym_bits() const { return constellation.bits(); }

    int tx() const;
    int slots() const;      // time slots spanned by one codeword
    int ext_cols() const;   // columns of the extended channel matrix
    int bits_per_codeword() const;
    double bpcu() const;    // eta

    /// Average transmitted symbol energy of one codeword (unit-energy symbols,
    /// no per-antenna rescaling).
    double energy_per_codeword() const;

    /// Energy per information bit; the E_b of the E_b/N_0 axis.
    double eb() const { return energy_per_codeword() / bits_per_codeword(); }

    bool two_slot() const { return slots() == 2; }
};

/// Validates parameters and builds the constellation. Throws
/// std::invalid_argument naming the offending field.
SchemeConfig make_config(Scheme scheme, int mirrors, int order, int rx,
                         ModKind mod = ModKind::Psk);

/// SSK for a T x R system; T must be a power of two.
SchemeConfig make_ssk_config(int tx, int rx);

/// Picks the customary constellation family: BPSK/QPSK for Q <= 4, QAM where
/// a square or 8-point rectangular grid exists, PSK otherwise.
ModKind default_mod_kind(int order);

std::string scheme_name(Scheme scheme);
Scheme parse_scheme(const std::string& name);

} // namespace stcm
