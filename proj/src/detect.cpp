#include "stcm/detect.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace stcm {

namespace {

double norm2(const CMatrix& y) {
    double s = 0.0;
    for (const cplx& v : y.data()) s += std::norm(v);
    return s;
}

// ||y - C z||_F^2 through the sparse codeword columns.
double codeword_metric(const CMatrix& y, const ExtendedChannel& h, const SchemeConfig& cfg,
                       const Codeword& cw) {
    std::array<SparseEntry, 2> entries;
    double metric = 0.0;
    for (int slot = 0; slot < cfg.slots(); ++slot) {
        const int cnt = column_entries(cw, cfg, slot, entries);
        for (int r = 0; r < h.rows(); ++r) {
            cplx diff = y(r, slot);
            for (int e = 0; e < cnt; ++e) diff -= h(r, entries[e].row) * entries[e].val;
            metric += std::norm(diff);
        }
    }
    return metric;
}

struct ScalarMl {
    std::size_t pos;   // constellation position of the minimizer
    double metric;     // ||y_eq - c x||^2
};

// min over the constellation of ||y_eq - c x||^2 given the matched-filter
// statistics cHy = c^H y_eq and c2 = ||c||^2; exact via nearest-point slicing.
ScalarMl scalar_ml(const Constellation& cst, cplx cHy, double c2, double y2) {
    if (c2 <= 0.0) return {0, y2};
    const std::size_t pos = cst.nearest_index(cHy / c2);
    const cplx x = cst.points[pos];
    const double metric = y2 - 2.0 * (std::conj(x) * cHy).real() + std::norm(x) * c2;
    return {pos, metric};
}

} // namespace

long long ml_metric_count(const SchemeConfig& cfg, DetectorKind kind) {
    const long long q = cfg.order;
    const long long states = cfg.states();
    if (kind == DetectorKind::BruteForce) {
        if (cfg.scheme == Scheme::Alamouti) return 2 * q;
        return 1LL << cfg.bits_per_codeword();
    }
    switch (cfg.scheme) {
        case Scheme::Alamouti: return 2 * q;
        case Scheme::Stcm1: return 2 * states * states * q; // 2^(2M+1) Q
        case Scheme::Stcm2: return 2 * states * q;          // 2^(M+1) Q
        default:
            throw std::invalid_argument("conditional ML detector is only defined for STCM "
                                        "schemes 1 and 2 and Alamouti, not " +
                                        scheme_name(cfg.scheme));
    }
}

Detection detect_bruteforce(const CMatrix& y, const ExtendedChannel& h, const SchemeConfig& cfg,
                            std::span<const Codeword> codewords) {
    if (y.rows() != cfg.rx || y.cols() != cfg.slots())
        throw std::invalid_argument("detect_bruteforce: received matrix is " +
                                    std::to_string(y.rows()) + "x" + std::to_string(y.cols()) +
                                    ", scheme expects " + std::to_string(cfg.rx) + "x" +
                                    std::to_string(cfg.slots()));
    double best = std::numeric_limits<double>::infinity();
    const Codeword* winner = &codewords[0];
    for (const Codeword& cw : codewords) {
        const double metric = codeword_metric(y, h, cfg, cw);
        if (metric < best) {
            best = metric;
            winner = &cw;
        }
    }
    return {*winner, ml_metric_count(cfg, DetectorKind::BruteForce)};
}

Detection detect_bruteforce(const CMatrix& y, const ExtendedChannel& h, const SchemeConfig& cfg) {
    const auto codewords = enumerate_codewords(cfg);
    return detect_bruteforce(y, h, cfg, codewords);
}

Detection detect_stcm_conditional(const CMatrix& y, const ExtendedChannel& h,
                                  const SchemeConfig& cfg) {
    const bool single_state = cfg.scheme == Scheme::Stcm2 || cfg.scheme == Scheme::Alamouti;
    if (cfg.scheme != Scheme::Stcm1 && !single_state)
        throw std::invalid_argument("conditional ML detector is only defined for STCM schemes 1 "
                                    "and 2 and Alamouti, not " + scheme_name(cfg.scheme));
    if (y.rows() != cfg.rx || y.cols() != 2)
        throw std::invalid_argument("detect_stcm_conditional: received matrix must be R x 2");

    const Constellation& cst = cfg.constellation;
    const int half = cfg.states();
    const int rx = cfg.rx;
    const double y2 = norm2(y);

    double best = std::numeric_limits<double>::infinity();
    int best_k = 1, best_l = 1;
    std::size_t best_x1 = 0, best_x2 = 0;

    for (int k = 1; k <= half; ++k) {
        const int l_lo = single_state ? k : 1;
        const int l_hi = single_state ? k : half;
        for (int l = l_lo; l <= l_hi; ++l) {
            // scheme 1: m=k, n=l; scheme 2 / Alamouti: all equal. Columns of the
            // equivalent channel are then orthogonal, so x1 and x2 decouple.
            cplx c1Hy{0.0, 0.0}, c2Hy{0.0, 0.0};
            double c1n = 0.0, c2n = 0.0;
            for (int r = 0; r < rx; ++r) {
                const cplx h1 = h(r, k - 1);            // first antenna, state k (= m)
                const cplx h2 = h(r, half + l - 1);     // second antenna, state l (= n)
                const cplx y1 = y(r, 0);
                const cplx y2c = std::conj(y(r, 1));
                c1Hy += std::conj(h1) * y1 + h2 * y2c;
                c2Hy += std::conj(h2) * y1 - h1 * y2c;
                c1n += std::norm(h1) + std::norm(h2);
            }
            c2n = c1n; // ||c1|| = ||c2|| for the orthogonal index selections
            const ScalarMl m1 = scalar_ml(cst, c1Hy, c1n, y2);
            const ScalarMl m2 = scalar_ml(cst, c2Hy, c2n, y2);
            const double d = m1.metric + m2.metric;
            if (d < best) {
                best = d;
                best_k = k;
                best_l = l;
                best_x1 = m1.pos;
                best_x2 = m2.pos;
            }
        }
    }

    Codeword cw;
    cw.index = pack_block(cfg, best_k, best_l, cst.labels[best_x1], cst.labels[best_x2]);
    cw.k = best_k;
    cw.l = single_state ? best_k : best_l;
    switch (cfg.scheme) {
        case Scheme::Stcm1: cw.m = cw.k; cw.n = cw.l; break;
        case Scheme::Stcm2: cw.m = cw.n = cw.k; break;
        default: cw.l = cw.m = cw.n = 1; break; // Alamouti
    }
    cw.x1 = cst.points[best_x1];
    cw.x2 = cst.points[best_x2];
    return {cw, ml_metric_count(cfg, DetectorKind::Conditional)};
}

Detection detect_alamouti(const CMatrix& y, const CMatrix& h, const Constellation& constellation) {
    if (h.cols() != 2)
        throw std::invalid_argument("detect_alamouti: channel must be R x 2");
    SchemeConfig cfg = make_config(Scheme::Alamouti, 0, constellation.order, h.rows(),
                                   constellation.kind);
    return detect_stcm_conditional(y, h, cfg);
}

} // namespace stcm
