#include <doctest.h>

#include <cmath>
#include <numbers>

#include "stcm/analysis.hpp"
#include "stcm/rng.hpp"

using namespace stcm;

namespace {

// Closed-form R-fold Rayleigh pairwise error probability for a single
// eigenvalue (the standard MRC result):
//   P = [(1-mu)/2]^R * sum_{k=0}^{R-1} C(R-1+k, k) [(1+mu)/2]^k
// with mu = sqrt(c/(1+c)), c = lambda/(4 N0). Test-only oracle.
double upep_closed_form(double lambda, int rx, double n0) {
    const double c = lambda / (4.0 * n0);
    const double mu = std::sqrt(c / (1.0 + c));
    const double lo = 0.5 * (1.0 - mu);
    const double hi = 0.5 * (1.0 + mu);
    double result = 0.0;
    double binom = 1.0; // C(R-1, 0)
    double hik = 1.0;
    for (int k = 0; k < rx; ++k) {
        result += binom * hik;
        binom = binom * (rx + k) / (k + 1); // C(R-1+k+1, k+1)
        hik *= hi;
    }
    return result * std::pow(lo, rx);
}

// Independent trapezoid integration of the fading-averaged PEP.
double upep_trapezoid(double l1, double l2, int d, int rx, double n0, int steps = 200'000) {
    const double c1 = l1 / (4.0 * n0);
    const double c2 = l2 / (4.0 * n0);
    auto f = [&](double t) {
        const double s2 = std::sin(t) * std::sin(t);
        double v = std::pow(s2 / (s2 + c1), rx);
        if (d == 2) v *= std::pow(s2 / (s2 + c2), rx);
        return v;
    };
    const double h = (std::numbers::pi / 2.0) / steps;
    double sum = 0.5 * (f(1e-300) + f(std::numbers::pi / 2.0));
    for (int i = 1; i < steps; ++i) sum += f(i * h);
    return sum * h / std::numbers::pi;
}

PairwiseEvent event_of(const SchemeConfig& cfg, std::uint32_t a, std::uint32_t b) {
    return pairwise_eigs(encode(a, cfg), encode(b, cfg), cfg);
}

} // namespace

TEST_CASE("identical codewords give a rank-0 event") {
    const auto cfg = make_config(Scheme::Stcm1, 2, 2, 1, ModKind::Psk);
    const auto ev = event_of(cfg, 5, 5);
    CHECK(ev.d == 0);
    CHECK(ev.trace == 0.0);
    CHECK(ev.bit_errors == 0);
    CHECK_THROWS_AS(upep_stcm(ev, 1, 0.1), std::invalid_argument);
}

TEST_CASE("eigenvalue sum equals the Gram trace") {
    for (const auto& cfg : {make_config(Scheme::Stcm1, 2, 4, 1, ModKind::Qam),
                            make_config(Scheme::Stcm3, 2, 2, 1, ModKind::Psk),
                            make_config(Scheme::Stcm2, 3, 8, 1, ModKind::Qam)}) {
        const auto cws = enumerate_codewords(cfg);
        RngStream rng(55, 0);
        for (int t = 0; t < 3000; ++t) {
            const auto i = rng.next_bits(cfg.bits_per_codeword());
            const auto j = rng.next_bits(cfg.bits_per_codeword());
            if (i == j) continue;
            const auto ev = pairwise_eigs(cws[i], cws[j], cfg);
            CHECK(ev.lambda[0] + ev.lambda[1] ==
                  doctest::Approx(ev.trace).epsilon(1e-10));
            CHECK(ev.lambda[0] >= 0.0);
            CHECK(ev.lambda[1] >= 0.0);
        }
    }
}

TEST_CASE("same-state symbol errors give the Alamouti-type scaled identity") {
    // both symbols flipped at identical channel states: Gram = (|d1|^2+|d2|^2) I
    const auto cfg = make_config(Scheme::Stcm1, 1, 2, 1, ModKind::Psk);
    const auto ev = event_of(cfg, 0b0000, 0b0011);
    CHECK(ev.d == 2);
    CHECK(ev.lambda[0] == doctest::Approx(8.0).epsilon(1e-12)); // |2|^2 + |2|^2
    CHECK(ev.lambda[1] == doctest::Approx(8.0).epsilon(1e-12));

    const auto alam = make_config(Scheme::Alamouti, 0, 4, 1, ModKind::Qam);
    const auto ev2 = event_of(alam, 0b0000, 0b0101);
    CHECK(ev2.d == 2);
    CHECK(ev2.lambda[0] == doctest::Approx(ev2.lambda[1]).epsilon(1e-12));
}

TEST_CASE("scheme 1 state-only error events collapse to rank one") {
    const auto cfg = make_config(Scheme::Stcm1, 1, 2, 1, ModKind::Psk);
    // k matches, l differs, symbols equal
    const auto ev = event_of(cfg, 0b0000, 0b0100);
    CHECK(ev.d == 1);
    CHECK(ev.lambda[1] < 1e-12);
}

TEST_CASE("quadrature matches the closed form over random triples") {
    RngStream rng(2030, 0);
    for (int t = 0; t < 1000; ++t) {
        const double lambda = 0.1 + 7.9 * rng.next_unit();
        const int rx = 1 + static_cast<int>(rng.next_bits(3));
        const double n0 = 0.02 + 1.98 * rng.next_unit();
        PairwiseEvent ev;
        ev.lambda[0] = lambda;
        ev.d = 1;
        const double quad = upep_stcm(ev, rx, n0);
        const double closed = upep_closed_form(lambda, rx, n0);
        CHECK(std::abs(quad - closed) < 1e-10);
    }
}

TEST_CASE("quadrature matches a dense trapezoid oracle, rank 2 included") {
    PairwiseEvent ev;
    ev.d = 2;
    for (auto [l1, l2, rx, n0] : {std::tuple{4.0, 4.0, 2, 0.5}, {2.5, 0.7, 4, 0.1},
                                  {8.0, 1.0, 1, 1.0}, {0.4, 0.4, 8, 0.05}}) {
        ev.lambda[0] = l1;
        ev.lambda[1] = l2;
        const double quad = upep_stcm(ev, rx, n0);
        const double trap = upep_trapezoid(l1, l2, 2, rx, n0);
        CHECK(std::abs(quad - trap) < 1e-11);
    }
}

TEST_CASE("single-eigenvalue forms agree to 1e-12") {
    RngStream rng(2031, 0);
    for (int t = 0; t < 300; ++t) {
        const double d2 = 0.2 + 6.0 * rng.next_unit();
        const int rx = 1 + static_cast<int>(rng.next_bits(3));
        const double n0 = 0.05 + rng.next_unit();
        PairwiseEvent ev;
        ev.lambda[0] = d2;
        ev.d = 1;
        CHECK(std::abs(upep_mbm(d2, rx, n0) - upep_stcm(ev, rx, n0)) < 1e-12);
    }
}

TEST_CASE("vanishing eigenvalue sends the UPEP to one half") {
    PairwiseEvent ev;
    ev.d = 1;
    ev.lambda[0] = 1e-14;
    CHECK(upep_stcm(ev, 1, 1.0) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("UPEP is bounded by its theta = pi/2 evaluation") {
    RngStream rng(2032, 0);
    for (int t = 0; t < 1000; ++t) {
        PairwiseEvent ev;
        ev.d = 1 + static_cast<int>(rng.next_bits(1));
        ev.lambda[0] = 0.1 + 8.0 * rng.next_unit();
        ev.lambda[1] = ev.d == 2 ? 0.1 + 4.0 * rng.next_unit() : 0.0;
        const int rx = 1 + static_cast<int>(rng.next_bits(2));
        const double n0 = 0.02 + rng.next_unit();
        double cap = std::pow(1.0 + ev.lambda[0] / (4.0 * n0), -rx);
        if (ev.d == 2) cap *= std::pow(1.0 + ev.lambda[1] / (4.0 * n0), -rx);
        CHECK(upep_stcm(ev, rx, n0) <= cap + 1e-15);
    }
}

TEST_CASE("UPEP decreases in lambda, rx and 1/N0") {
    PairwiseEvent lo, hi;
    lo.d = hi.d = 1;
    lo.lambda[0] = 1.0;
    hi.lambda[0] = 1.5;
    CHECK(upep_stcm(hi, 2, 0.2) < upep_stcm(lo, 2, 0.2));
    CHECK(upep_stcm(lo, 3, 0.2) < upep_stcm(lo, 2, 0.2));
    CHECK(upep_stcm(lo, 2, 0.1) < upep_stcm(lo, 2, 0.2));
}

TEST_CASE("plain MBM distances are all 2 and the bound uses Hamming weights") {
    const auto cfg = make_config(Scheme::MbmSimo, 3, 1, 2);
    const auto cws = enumerate_codewords(cfg);
    for (std::size_t i = 0; i < cws.size(); ++i)
        for (std::size_t j = 0; j < cws.size(); ++j) {
            if (i == j) continue;
            const auto ev = pairwise_eigs(cws[i], cws[j], cfg);
            CHECK(ev.lambda[0] == doctest::Approx(2.0).epsilon(1e-14));
        }

    const double p = upep_mbm(2.0, 4, 0.2);
    CHECK(abep_bound_mbm(1, 1, 4, 0.2) == doctest::Approx(p).epsilon(1e-14));
    // M=2: weights over wrong states 01,10,11 sum to 4 -> bound = 2p
    CHECK(abep_bound_mbm(2, 1, 4, 0.2) == doctest::Approx(2.0 * p).epsilon(1e-14));
}

TEST_CASE("plain MBM shortcut equals full enumeration") {
    for (int m : {2, 3, 4}) {
        const auto cfg = make_config(Scheme::MbmSimo, m, 1, 3);
        CHECK(abep_bound(cfg, 0.15).bound ==
              doctest::Approx(abep_bound_mbm(m, 1, 3, 0.15)).epsilon(1e-12));
    }
}

TEST_CASE("SSK bound equals the MBM bound exactly") {
    const auto ssk = make_ssk_config(16, 8);
    CHECK(abep_bound(ssk, 0.08).bound == abep_bound_mbm(4, 1, 8, 0.08));
}

TEST_CASE("ABEP bound equals an independent dense-Gram double-sum oracle") {
    const auto cfg = make_config(Scheme::Stcm3, 1, 2, 2, ModKind::Psk);
    const auto cws = enumerate_codewords(cfg);
    const double n0 = 0.2;

    double sum = 0.0;
    for (std::size_t i = 0; i < cws.size(); ++i) {
        const auto zi = codeword_matrix(cws[i], cfg);
        for (std::size_t j = 0; j < cws.size(); ++j) {
            if (i == j) continue;
            const auto zj = codeword_matrix(cws[j], cfg);
            // dense 2x2 Gram of the difference
            cplx g00{0, 0}, g01{0, 0}, g11{0, 0};
            for (int r = 0; r < zi.rows(); ++r) {
                const cplx d0 = zi(r, 0) - zj(r, 0);
                const cplx d1 = zi(r, 1) - zj(r, 1);
                g00 += std::conj(d0) * d0;
                g01 += std::conj(d0) * d1;
                g11 += std::conj(d1) * d1;
            }
            const double tr = g00.real() + g11.real();
            const double det = g00.real() * g11.real() - std::norm(g01);
            const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
            const double l1 = 0.5 * (tr + disc), l2 = std::max(0.0, 0.5 * (tr - disc));
            const int d = (l1 > 1e-9 * tr) + (l2 > 1e-9 * tr);
            int e = 0;
            for (std::uint32_t x = cws[i].index ^ cws[j].index; x; x >>= 1) e += x & 1;
            sum += upep_trapezoid(l1, l2, d, cfg.rx, n0, 50'000) * e;
        }
    }
    const double oracle = sum / (static_cast<double>(cws.size()) * cfg.bits_per_codeword());
    CHECK(abep_bound_stcm(cfg, n0).bound == doctest::Approx(oracle).epsilon(1e-7));
}

TEST_CASE("bound is vacuous at huge N0 and decreasing in 1/N0") {
    const auto cfg = make_config(Scheme::Stcm1, 2, 2, 2, ModKind::Psk);
    const double far = abep_bound(cfg, 1e6).bound;
    CHECK(far > 0.5);
    CHECK(abep_bound(cfg, 1.0).bound < far);
    CHECK(abep_bound(cfg, 0.01).bound < abep_bound(cfg, 1.0).bound);
}

TEST_CASE("diversity_min per scheme") {
    CHECK(diversity_min(make_config(Scheme::Stcm1, 2, 2, 1, ModKind::Psk)) == 1);
    CHECK(diversity_min(make_config(Scheme::Stcm2, 2, 2, 1, ModKind::Psk)) == 2);
    CHECK(diversity_min(make_config(Scheme::Stcm3, 2, 4, 1, ModKind::Qam)) == 2);
    CHECK(diversity_min(make_config(Scheme::Alamouti, 0, 4, 1, ModKind::Qam)) == 2);
    CHECK(diversity_min(make_config(Scheme::MbmSimo, 2, 1, 1)) == 1);
}

TEST_CASE("high-SNR bound slope approaches R * D_min") {
    const auto cfg = make_config(Scheme::Stcm3, 1, 2, 1, ModKind::Psk);
    const auto spectrum = pair_spectrum(cfg);
    // last decade of a 40 dB sweep, log-log slope
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    const double eb = cfg.eb();
    x0 = 30.0 / 10.0;
    x1 = 40.0 / 10.0;
    y0 = std::log10(abep_from_spectrum(spectrum, cfg.rx, eb * std::pow(10.0, -3.0)));
    y1 = std::log10(abep_from_spectrum(spectrum, cfg.rx, eb * std::pow(10.0, -4.0)));
    const double slope = -(y1 - y0) / (x1 - x0);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.075)); // R=1, D_min=2
}

TEST_CASE("pair sampling approximates the exact bound with a reported CI") {
    const auto cfg = make_config(Scheme::Stcm1, 2, 2, 2, ModKind::Psk);
    const double exact = abep_bound(cfg, 0.05).bound;

    AbepOptions opts;
    opts.enumeration_cap = 16; // force the sampling path
    opts.sampling = false;
    CHECK_THROWS_AS(abep_bound(cfg, 0.05, opts), std::length_error);

    opts.sampling = true;
    opts.sample_pairs = 200'000;
    const auto est = abep_bound(cfg, 0.05, opts);
    CHECK(est.sampled);
    CHECK(est.ci95 > 0.0);
    CHECK(std::abs(est.bound - exact) < 5.0 * est.ci95);
}

TEST_CASE("abep_bound_stcm rejects one-slot schemes") {
    CHECK_THROWS_AS(abep_bound_stcm(make_config(Scheme::MbmSimo, 2, 1, 1), 0.1),
                    std::invalid_argument);
}

TEST_CASE("trade-off table rows") {
    const auto at_eta5_q2 = tradeoff_table(4, 2, 4);
    auto find = [](const std::vector<TradeoffRow>& rows, const std::string& name) {
        for (const auto& r : rows)
            if (r.scheme == name) return r;
        throw std::runtime_error("row not found");
    };
    CHECK(find(at_eta5_q2, "stcm1").complexity == 1024);
    CHECK(find(at_eta5_q2, "stcm1").data_rate == doctest::Approx(5.0));
    CHECK(find(at_eta5_q2, "stcm1").tx_diversity == 1);
    CHECK(find(at_eta5_q2, "stcm3").complexity == 1024);
    CHECK(find(at_eta5_q2, "stcm3").tx_diversity == 2);
    CHECK(find(at_eta5_q2, "mbm-simo").complexity == 32);

    const auto at_eta5_q8 = tradeoff_table(4, 8, 4);
    CHECK(find(at_eta5_q8, "stcm2").complexity == 256);
    CHECK(find(at_eta5_q8, "stcm2").data_rate == doctest::Approx(5.0));
    CHECK(find(at_eta5_q8, "stcm2").tx_diversity == 2);

    const auto at_eta6 = tradeoff_table(4, 4, 4);
    CHECK(find(at_eta6, "stcm1").complexity == 2048);
    CHECK(find(at_eta6, "stcm3").complexity == 4096);
    CHECK(find(tradeoff_table(4, 16, 4), "stcm2").complexity == 512);

    // STBC-SM with T=4: C = floor(log2 6) = 2, eta = 1 + log2 Q
    const auto stbc = find(tradeoff_table(4, 4, 4), "stbc-sm");
    CHECK(stbc.data_rate == doctest::Approx(3.0));
    CHECK(stbc.complexity == 32); // 2^(C+1) Q
    CHECK(find(tradeoff_table(4, 2, 4), "alamouti").complexity == 4);
}
