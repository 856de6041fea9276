#include "stcm/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "stcm/numeric.hpp"
#include "stcm/rng.hpp"

namespace stcm {

namespace {

constexpr double kRankTol = 1e-9;

// Gram matrix of the codeword difference, accumulated over the sparse
// entries of both codewords. At most 8 distinct rows are touched.
struct GramAcc {
    struct Row {
        int row;
        cplx c0, c1;
    };
    std::array<Row, 8> rows{};
    int count = 0;

    void add(int row, int slot, cplx val) {
        for (int i = 0; i < count; ++i) {
            if (rows[i].row == row) {
                (slot == 0 ? rows[i].c0 : rows[i].c1) += val;
                return;
            }
        }
        Row& r = rows[count++];
        r.row = row;
        r.c0 = slot == 0 ? val : cplx{};
        r.c1 = slot == 0 ? cplx{} : val;
    }
};

PairwiseEvent event_from_gram(double a, double b, cplx cross, int bit_errors) {
    PairwiseEvent ev;
    ev.bit_errors = bit_errors;
    ev.trace = a + b;
    const double diff = a - b;
    const double disc = std::sqrt(diff * diff + 4.0 * std::norm(cross));
    ev.lambda[0] = 0.5 * (ev.trace + disc);
    ev.lambda[1] = std::max(0.0, 0.5 * (ev.trace - disc));
    const double tol = kRankTol * ev.trace;
    ev.d = 0;
    for (double l : ev.lambda)
        if (l > tol) ++ev.d;
    if (ev.trace <= 0.0) ev.d = 0;
    return ev;
}

double upep_lambdas(double l1, double l2, int d, int rx, double n0) {
    const double c1 = l1 / (4.0 * n0);
    const double c2 = l2 / (4.0 * n0);
    auto integrand = [&](double t) {
        const double s = std::sin(t);
        const double s2 = s * s;
        double f = 1.0 / ipow(1.0 + c1 / s2, rx);
        if (d == 2) f /= ipow(1.0 + c2 / s2, rx);
        return f;
    };
    return gauss_legendre_64(integrand, 0.0, std::numbers::pi / 2.0) / std::numbers::pi;
}

// Eigenvalue class key; 2^-32 absolute resolution merges only classes whose
// UPEPs are equal far beyond the bound's own accuracy.
std::pair<std::int64_t, std::int64_t> spectrum_key(double l1, double l2) {
    return {std::llround(l1 * 0x1p32), std::llround(l2 * 0x1p32)};
}

PairSpectrum spectrum_from_codewords(const std::vector<Codeword>& codewords,
                                     const SchemeConfig& cfg) {
    std::map<std::pair<std::int64_t, std::int64_t>, PairSpectrum::Entry> classes;
    const std::size_t count = codewords.size();
    int min_rank = 0;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            PairwiseEvent ev = pairwise_eigs(codewords[i], codewords[j], cfg);
            // the event is symmetric in (Z, Zhat), so each unordered pair counts twice
            auto& entry = classes[spectrum_key(ev.lambda[0], ev.lambda[1])];
            entry.lambda1 = ev.lambda[0];
            entry.lambda2 = ev.lambda[1];
            entry.d = ev.d;
            entry.weight += 2.0 * ev.bit_errors;
            min_rank = min_rank == 0 ? ev.d : std::min(min_rank, ev.d);
        }
    }
    PairSpectrum spectrum;
    spectrum.codewords = count;
    spectrum.bits = cfg.bits_per_codeword();
    spectrum.two_slot = cfg.two_slot();
    spectrum.min_rank = min_rank;
    spectrum.entries.reserve(classes.size());
    for (const auto& [key, entry] : classes) spectrum.entries.push_back(entry);
    return spectrum;
}

AbepResult abep_sampled(const SchemeConfig& cfg, double n0, const AbepOptions& opts) {
    const int bits = cfg.bits_per_codeword();
    const std::uint64_t count = std::uint64_t{1} << bits;
    RngStream rng(opts.sample_seed, 0);
    std::unordered_map<std::int64_t, double> upep_cache;

    const std::uint64_t mask = count - 1;
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t s = 0; s < opts.sample_pairs; ++s) {
        std::uint64_t i = rng.next_u64() & mask;
        std::uint64_t j = rng.next_u64() & mask;
        while (j == i) j = rng.next_u64() & mask;
        const Codeword zi = encode(static_cast<std::uint32_t>(i), cfg);
        const Codeword zj = encode(static_cast<std::uint32_t>(j), cfg);
        const PairwiseEvent ev = pairwise_eigs(zi, zj, cfg);
        const auto key = spectrum_key(ev.lambda[0], ev.lambda[1]);
        const std::int64_t flat = key.first * 0x100000001b3LL ^ key.second;
        auto it = upep_cache.find(flat);
        if (it == upep_cache.end())
            it = upep_cache.emplace(flat, upep_lambdas(ev.lambda[0], ev.lambda[1], ev.d, cfg.rx, n0)).first;
        const double x = it->second * ev.bit_errors;
        sum += x;
        sum_sq += x * x;
    }
    const double n = static_cast<double>(opts.sample_pairs);
    const double mean = sum / n;
    const double var = std::max(0.0, sum_sq / n - mean * mean);
    const double scale = static_cast<double>(count - 1) / bits;

    AbepResult res;
    res.bound = mean * scale;
    res.ci95 = 1.96 * std::sqrt(var / n) * scale;
    res.sampled = true;
    return res;
}

long long pow2ll(int e) { return 1LL << e; }

} // namespace

PairwiseEvent pairwise_eigs(const Codeword& z, const Codeword& zhat, const SchemeConfig& cfg) {
    GramAcc acc;
    std::array<SparseEntry, 2> entries;
    for (int slot = 0; slot < cfg.slots(); ++slot) {
        int cnt = column_entries(z, cfg, slot, entries);
        for (int e = 0; e < cnt; ++e) acc.add(entries[e].row, slot, entries[e].val);
        cnt = column_entries(zhat, cfg, slot, entries);
        for (int e = 0; e < cnt; ++e) acc.add(entries[e].row, slot, -entries[e].val);
    }
    double a = 0.0, b = 0.0;
    cplx cross{0.0, 0.0};
    for (int i = 0; i < acc.count; ++i) {
        a += std::norm(acc.rows[i].c0);
        b += std::norm(acc.rows[i].c1);
        cross += std::conj(acc.rows[i].c0) * acc.rows[i].c1;
    }
    return event_from_gram(a, b, cross,
                           std::popcount(z.index ^ zhat.index));
}

double upep_stcm(const PairwiseEvent& event, int rx, double n0) {
    if (event.d < 1)
        throw std::invalid_argument("upep_stcm: no error event (rank 0)");
    if (!(n0 > 0.0)) throw std::invalid_argument("upep_stcm: N0 must be positive");
    return upep_lambdas(event.lambda[0], event.lambda[1], event.d, rx, n0);
}

double upep_mbm(double dist_sq, int rx, double n0) {
    if (!(dist_sq > 0.0)) throw std::invalid_argument("upep_mbm: squared distance must be positive");
    if (!(n0 > 0.0)) throw std::invalid_argument("upep_mbm: N0 must be positive");
    const double c = dist_sq / (4.0 * n0);
    auto integrand = [&](double t) {
        const double s = std::sin(t);
        const double s2 = s * s;
        return ipow(s2 / (s2 + c), rx);
    };
    return gauss_legendre_64(integrand, 0.0, std::numbers::pi / 2.0) / std::numbers::pi;
}

PairSpectrum pair_spectrum(const SchemeConfig& cfg, std::size_t cap) {
    return spectrum_from_codewords(enumerate_codewords(cfg, cap), cfg);
}

double abep_from_spectrum(const PairSpectrum& spectrum, int rx, double n0) {
    double sum = 0.0;
    for (const auto& e : spectrum.entries) {
        const double p = spectrum.two_slot
                             ? upep_lambdas(e.lambda1, e.lambda2, e.d, rx, n0)
                             : upep_mbm(e.lambda1, rx, n0);
        sum += p * e.weight;
    }
    return sum / (static_cast<double>(spectrum.codewords) * spectrum.bits);
}

AbepResult abep_bound(const SchemeConfig& cfg, double n0, const AbepOptions& opts) {
    if (!(n0 > 0.0)) throw std::invalid_argument("abep_bound: N0 must be positive");
    const std::size_t count = std::size_t{1} << cfg.bits_per_codeword();
    if (count > opts.enumeration_cap) {
        if (!opts.sampling)
            throw std::length_error("codeword enumeration too large (" + std::to_string(count) +
                                    " > cap " + std::to_string(opts.enumeration_cap) +
                                    "); enable pair sampling or raise the cap");
        return abep_sampled(cfg, n0, opts);
    }
    AbepResult res;
    res.bound = abep_from_spectrum(pair_spectrum(cfg, opts.enumeration_cap), cfg.rx, n0);
    return res;
}

AbepResult abep_bound_stcm(const SchemeConfig& cfg, double n0, const AbepOptions& opts) {
    if (!cfg.two_slot())
        throw std::invalid_argument("abep_bound_stcm expects a two-slot scheme, not " +
                                    scheme_name(cfg.scheme));
    return abep_bound(cfg, n0, opts);
}

double abep_bound_mbm(int mirrors, int order, int rx, double n0) {
    if (order == 1) {
        if (mirrors < 1) throw std::invalid_argument("abep_bound_mbm: plain MBM needs M >= 1");
        // all pairwise distances equal 2; reference vector e_1 carries label 0,
        // so the bit-error weights are the Hamming weights of the wrong states
        const double p = upep_mbm(2.0, rx, n0);
        double weighted = 0.0;
        for (std::uint32_t wrong = 1; wrong < (1u << mirrors); ++wrong)
            weighted += std::popcount(wrong);
        return p * weighted / mirrors;
    }
    const SchemeConfig cfg = make_config(mirrors == 0 ? Scheme::ClassicalSimo : Scheme::MbmSimo,
                                         mirrors, order, rx, default_mod_kind(order));
    return abep_bound(cfg, n0).bound;
}

int diversity_min(const SchemeConfig& cfg, std::size_t cap) {
    const PairSpectrum spectrum = pair_spectrum(cfg, cap);
    if (spectrum.min_rank == 0)
        throw std::invalid_argument("diversity_min: scheme has no distinct codeword pairs");
    return spectrum.min_rank;
}

std::vector<TradeoffRow> tradeoff_table(int mirrors, int order, int tx) {
    const int m = mirrors;
    const double logq = order > 1 ? std::log2(static_cast<double>(order)) : 0.0;
    const long long q = order;

    const long long ant_pairs = tx >= 2 ? static_cast<long long>(tx) * (tx - 1) / 2 : 1;
    const int c = ant_pairs >= 1 ? static_cast<int>(std::bit_width(static_cast<std::uint64_t>(ant_pairs)) - 1) : 0;

    std::vector<TradeoffRow> rows;
    rows.push_back({"simo", logq, 1, q, "Q"});
    rows.push_back({"alamouti", logq, 2, 2 * q, "2Q"});
    rows.push_back({"stbc-sm", 0.5 * c + logq, 2, pow2ll(c + 1) * q, "2^(C+1) Q"});
    rows.push_back({"mbm-simo", m + logq, 1, pow2ll(m) * q, "2^M Q"});
    rows.push_back({"mbm-mimo", 2 * m + 2 * logq, 1, pow2ll(2 * m) * q * q, "2^(2M) Q^2"});
    rows.push_back({"stcm1", m + logq, 1, pow2ll(2 * m + 1) * q, "2^(2M+1) Q"});
    rows.push_back({"stcm2", 0.5 * m + logq, 2, pow2ll(m + 1) * q, "2^(M+1) Q"});
    rows.push_back({"stcm3", m + logq, 2, pow2ll(2 * m) * q * q, "2^(2M) Q^2"});
    return rows;
}

} // namespace stcm
