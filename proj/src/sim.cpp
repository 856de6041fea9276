#include "stcm/sim.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace stcm {

namespace {

constexpr long long kBatchBlocks = 8192;

bool conditional_detector_applies(const SchemeConfig& cfg) {
    return cfg.scheme == Scheme::Stcm1 || cfg.scheme == Scheme::Stcm2 ||
           cfg.scheme == Scheme::Alamouti;
}

long long run_block_range(const SchemeConfig& cfg, double n0, std::uint64_t seed,
                          std::uint32_t snr_index, std::uint64_t begin, std::uint64_t end,
                          const std::vector<Codeword>* codewords, bool zero_noise) {
    const int b = cfg.bits_per_codeword();
    ExtendedChannel h(cfg.rx, cfg.ext_cols());
    CMatrix y(cfg.rx, cfg.slots());
    long long errors = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        RngStream rng(seed, make_stream_id(snr_index, idx));
        const std::uint32_t tx_block = rng.next_bits(b);
        const Codeword cw = encode(tx_block, cfg);
        fill_extended_channel(h, rng);
        transmit_into(y, cw, cfg, h);
        if (!zero_noise) add_awgn_inplace(y, n0, rng);
        const Detection det = codewords ? detect_bruteforce(y, h, cfg, *codewords)
                                        : detect_stcm_conditional(y, h, cfg);
        errors += std::popcount(tx_block ^ det.decided.index);
    }
    return errors;
}

double theory_value(const SchemeConfig& cfg, double n0, const SimOptions& opts,
                    const PairSpectrum* spectrum) {
    if (spectrum) return abep_from_spectrum(*spectrum, cfg.rx, n0);
    return abep_bound(cfg, n0, opts.abep).bound;
}

BerRecord run_point_impl(const SchemeConfig& cfg, double snr_db, const StopRule& stop,
                         std::uint64_t seed, std::uint32_t snr_index, const SimOptions& opts,
                         const PairSpectrum* spectrum) {
    if (stop.min_bit_errors <= 0 || stop.max_bits <= 0)
        throw std::invalid_argument("stop rule limits must be positive");
    if (!std::isfinite(snr_db)) throw std::invalid_argument("snr_db must be finite");

    const auto t0 = std::chrono::steady_clock::now();
    const double n0 = cfg.eb() / std::pow(10.0, snr_db / 10.0);
    const int b = cfg.bits_per_codeword();
    const int workers = resolve_workers(opts);

    const bool conditional = !opts.force_bruteforce && conditional_detector_applies(cfg);
    std::vector<Codeword> table;
    if (!conditional) table = enumerate_codewords(cfg);
    const std::vector<Codeword>* table_ptr = conditional ? nullptr : &table;

    long long bits = 0, errors = 0;
    std::uint64_t next_block = 0;
    while (errors < stop.min_bit_errors && bits < stop.max_bits) {
        const long long remaining_blocks = (stop.max_bits - bits + b - 1) / b;
        const long long blocks = std::min(kBatchBlocks, remaining_blocks);
        const int w = static_cast<int>(std::min<long long>(workers, blocks));
        if (w <= 1) {
            errors += run_block_range(cfg, n0, seed, snr_index, next_block, next_block + blocks,
                                      table_ptr, opts.zero_noise);
        } else {
            std::vector<long long> partial(w, 0);
            std::vector<std::thread> threads;
            threads.reserve(w);
            const long long chunk = (blocks + w - 1) / w;
            for (int t = 0; t < w; ++t) {
                const std::uint64_t lo = next_block + t * chunk;
                const std::uint64_t hi = next_block + std::min<long long>(blocks, (t + 1) * chunk);
                threads.emplace_back([&, t, lo, hi] {
                    partial[t] = run_block_range(cfg, n0, seed, snr_index, lo, hi, table_ptr,
                                                 opts.zero_noise);
                });
            }
            for (auto& th : threads) th.join();
            for (long long p : partial) errors += p;
        }
        bits += blocks * b;
        next_block += blocks;
    }

    BerRecord rec;
    rec.snr_db = snr_db;
    rec.bits = bits;
    rec.errors = errors;
    rec.ber = static_cast<double>(errors) / static_cast<double>(bits);
    if (opts.attach_theory) rec.theory = theory_value(cfg, n0, opts, spectrum);
    rec.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

} // namespace

int resolve_workers(const SimOptions& opts) {
    if (opts.workers > 0) return opts.workers;
    if (const char* env = std::getenv("STCM_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

BerRecord run_point(const SchemeConfig& cfg, double snr_db, const StopRule& stop,
                    std::uint64_t seed, std::uint32_t snr_index, const SimOptions& opts) {
    PairSpectrum spectrum;
    const PairSpectrum* spectrum_ptr = nullptr;
    if (opts.attach_theory &&
        (std::size_t{1} << cfg.bits_per_codeword()) <= opts.abep.enumeration_cap) {
        spectrum = pair_spectrum(cfg, opts.abep.enumeration_cap);
        spectrum_ptr = &spectrum;
    }
    return run_point_impl(cfg, snr_db, stop, seed, snr_index, opts, spectrum_ptr);
}

std::vector<BerRecord> run_sweep(const SchemeConfig& cfg, const std::vector<double>& snr_db,
                                 const StopRule& stop, std::uint64_t seed,
                                 const SimOptions& opts) {
    if (snr_db.empty()) throw std::invalid_argument("snr list must be nonempty");
    for (std::size_t i = 1; i < snr_db.size(); ++i)
        if (!(snr_db[i] > snr_db[i - 1]))
            throw std::invalid_argument("snr list must be strictly increasing");

    PairSpectrum spectrum;
    const PairSpectrum* spectrum_ptr = nullptr;
    if (opts.attach_theory &&
        (std::size_t{1} << cfg.bits_per_codeword()) <= opts.abep.enumeration_cap) {
        spectrum = pair_spectrum(cfg, opts.abep.enumeration_cap);
        spectrum_ptr = &spectrum;
    }

    std::vector<BerRecord> records;
    records.reserve(snr_db.size());
    for (std::size_t i = 0; i < snr_db.size(); ++i)
        records.push_back(run_point_impl(cfg, snr_db[i], stop, seed,
                                         static_cast<std::uint32_t>(i), opts, spectrum_ptr));
    return records;
}

} // namespace stcm
