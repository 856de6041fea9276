#include "stcm/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace stcm {

namespace {

std::string fmt_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::optional<double> parse_opt(const std::string& field) {
    if (field.empty()) return std::nullopt;
    return std::stod(field);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

ExperimentSpec curve(const std::string& name, Scheme scheme, int m, int q, int rx,
                     SnrRange snr, bool theory, const std::string& out_dir) {
    ExperimentSpec spec;
    spec.name = name;
    spec.cfg = make_config(scheme, m, q, rx, default_mod_kind(std::max(q, 2)));
    spec.snr = snr;
    spec.with_theory = theory;
    spec.csv_path = out_dir + "/" + name + ".csv";
    return spec;
}

} // namespace

std::vector<double> SnrRange::points() const {
    if (!(step > 0.0)) throw std::invalid_argument("invalid experiment spec: field 'snr_step': must be > 0");
    if (!(start <= stop)) throw std::invalid_argument("invalid experiment spec: field 'snr_start': must be <= snr_stop");
    std::vector<double> pts;
    for (double v = start; v <= stop + 1e-9; v += step) pts.push_back(v);
    return pts;
}

void write_csv(const std::string& path, const SchemeConfig& cfg, std::uint64_t seed,
               const std::vector<BerRecord>& records) {
    std::ofstream os(path, std::ios::binary); // binary keeps LF endings everywhere
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    os << "scheme,M,Q,R,snr_db,bits,errors,ber,theory_abep,seed\n";
    for (const BerRecord& r : records) {
        os << scheme_name(cfg.scheme) << ',' << cfg.mirrors << ',' << cfg.order << ','
           << cfg.rx << ',' << fmt_real(r.snr_db) << ',' << r.bits << ',' << r.errors << ',';
        if (r.bits > 0) os << fmt_real(r.ber);
        os << ',';
        if (r.theory) os << fmt_real(*r.theory);
        os << ',' << seed << '\n';
    }
    if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<CsvRow> read_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty CSV '" + path + "'");
    std::vector<CsvRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto f = split_line(line);
        if (f.size() != 10) throw std::runtime_error("malformed CSV row in '" + path + "'");
        CsvRow row;
        row.scheme = f[0];
        row.mirrors = std::stoi(f[1]);
        row.order = std::stoi(f[2]);
        row.rx = std::stoi(f[3]);
        row.snr_db = std::stod(f[4]);
        row.bits = std::stoll(f[5]);
        row.errors = std::stoll(f[6]);
        row.ber = parse_opt(f[7]);
        row.theory = parse_opt(f[8]);
        row.seed = std::stoull(f[9]);
        rows.push_back(row);
    }
    return rows;
}

std::vector<BerRecord> run_experiment(const ExperimentSpec& spec, const SimOptions& opts) {
    SimOptions o = opts;
    o.attach_theory = spec.with_theory;
    const auto records = run_sweep(spec.cfg, spec.snr.points(), spec.stop, spec.seed, o);
    if (!spec.csv_path.empty()) write_csv(spec.csv_path, spec.cfg, spec.seed, records);
    return records;
}

std::vector<BerRecord> run_analysis(const ExperimentSpec& spec, const SimOptions& opts) {
    PairSpectrum spectrum;
    const PairSpectrum* spectrum_ptr = nullptr;
    if ((std::size_t{1} << spec.cfg.bits_per_codeword()) <= opts.abep.enumeration_cap) {
        spectrum = pair_spectrum(spec.cfg, opts.abep.enumeration_cap);
        spectrum_ptr = &spectrum;
    }
    std::vector<BerRecord> records;
    for (double snr : spec.snr.points()) {
        const double n0 = spec.cfg.eb() / std::pow(10.0, snr / 10.0);
        BerRecord rec;
        rec.snr_db = snr;
        rec.theory = spectrum_ptr ? abep_from_spectrum(*spectrum_ptr, spec.cfg.rx, n0)
                                  : abep_bound(spec.cfg, n0, opts.abep).bound;
        records.push_back(rec);
    }
    if (!spec.csv_path.empty()) write_csv(spec.csv_path, spec.cfg, spec.seed, records);
    return records;
}

void print_tradeoff_table(std::ostream& os, int mirrors, int order, int tx) {
    os << "scheme      eta (bpcu)  D_min  ML metric calcs  formula\n";
    for (const TradeoffRow& row : tradeoff_table(mirrors, order, tx)) {
        std::ostringstream eta;
        eta << row.data_rate;
        os << std::left << std::setw(12) << row.scheme << std::setw(12) << eta.str()
           << std::setw(7) << row.tx_diversity << std::setw(17) << row.complexity
           << row.formula << '\n';
    }
}

std::vector<std::string> preset_names() {
    return {"fig1", "fig2", "fig4", "fig5", "fig6"};
}

std::vector<ExperimentSpec> expand_preset(const std::string& name, const std::string& out_dir) {
    std::vector<ExperimentSpec> specs;
    if (name == "fig1") {
        // classical SIMO vs MBM-SIMO at R=8 across data rates, theory attached
        for (int eta : {2, 4, 8}) {
            specs.push_back(curve("fig1_simo_eta" + std::to_string(eta), Scheme::ClassicalSimo,
                                  0, 1 << eta, 8, {0, 26, 2}, true, out_dir));
            specs.push_back(curve("fig1_mbm_eta" + std::to_string(eta), Scheme::MbmSimo,
                                  eta, 1, 8, {0, 14, 2}, true, out_dir));
        }
    } else if (name == "fig2") {
        // eta = 8 bpcu: 256-QAM SIMO vs M=8 MBM, sweep over receive antennas
        for (int rx : {1, 2, 4, 8}) {
            const SnrRange simo_range = rx == 1 ? SnrRange{20, 50, 2} : SnrRange{0, 30, 2};
            const SnrRange mbm_range = rx == 1 ? SnrRange{10, 44, 2} : SnrRange{0, 24, 2};
            specs.push_back(curve("fig2_simo_r" + std::to_string(rx), Scheme::ClassicalSimo,
                                  0, 256, rx, simo_range, true, out_dir));
            specs.push_back(curve("fig2_mbm_r" + std::to_string(rx), Scheme::MbmSimo,
                                  8, 1, rx, mbm_range, true, out_dir));
        }
    } else if (name == "fig4") {
        // STCM schemes, M=4, eta=5, theory curves attached
        for (int rx : {2, 4}) {
            const SnrRange range = rx == 2 ? SnrRange{0, 26, 2} : SnrRange{0, 16, 2};
            const std::string suffix = "_r" + std::to_string(rx);
            specs.push_back(curve("fig4_stcm1" + suffix, Scheme::Stcm1, 4, 2, rx, range, true, out_dir));
            specs.push_back(curve("fig4_stcm2" + suffix, Scheme::Stcm2, 4, 8, rx, range, true, out_dir));
            specs.push_back(curve("fig4_stcm3" + suffix, Scheme::Stcm3, 4, 2, rx, range, true, out_dir));
        }
    } else if (name == "fig5" || name == "fig6") {
        // eta = 5 or 6 bpcu comparison against Alamouti and MBM-SIMO.
        // 32-QAM has no square/rectangular grid here, so the eta=5 Alamouti
        // reference runs 32-PSK.
        const bool six = name == "fig6";
        const int q_stcm13 = six ? 4 : 2;
        const int q_stcm2 = six ? 16 : 8;
        const int q_alamouti = six ? 64 : 32;
        for (int rx : {2, 4}) {
            const SnrRange range = rx == 2 ? SnrRange{0, 26, 2} : SnrRange{0, 16, 2};
            const std::string suffix = "_r" + std::to_string(rx);
            specs.push_back(curve(name + "_stcm1" + suffix, Scheme::Stcm1, 4, q_stcm13, rx, range, false, out_dir));
            specs.push_back(curve(name + "_stcm2" + suffix, Scheme::Stcm2, 4, q_stcm2, rx, range, false, out_dir));
            specs.push_back(curve(name + "_stcm3" + suffix, Scheme::Stcm3, 4, q_stcm13, rx, range, false, out_dir));
            specs.push_back(curve(name + "_alamouti" + suffix, Scheme::Alamouti, 0, q_alamouti, rx, range, false, out_dir));
            specs.push_back(curve(name + "_mbm" + suffix, Scheme::MbmSimo, 4, q_stcm13, rx, range, false, out_dir));
        }
    } else {
        throw std::invalid_argument("unknown preset '" + name + "' (available: fig1 fig2 fig4 fig5 fig6)");
    }
    return specs;
}

} // namespace stcm
