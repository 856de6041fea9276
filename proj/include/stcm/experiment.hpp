#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stcm/sim.hpp"

namespace stcm {

struct SnrRange {
    double start = 0.0;
    double stop = 20.0;
    double step = 2.0;

    std::vector<double> points() const; // throws for empty/invalid ranges
};

/// One BER or theory curve: resolved scheme, SNR grid, stop rule, outputs.
struct ExperimentSpec {
    std::string name; // curve label, used for preset file names
    SchemeConfig cfg;
    SnrRange snr;
    StopRule stop;
    std::uint64_t seed = 1;
    bool with_theory = false;
    std::string csv_path;
};

struct CsvRow {
    std::string scheme;
    int mirrors = 0;
    int order = 1;
    int rx = 1;
    double snr_db = 0.0;
    long long bits = 0;
    long long errors = 0;
    std::optional<double> ber;
    std::optional<double> theory;
    std::uint64_t seed = 0;
};

/// CSV with header scheme,M,Q,R,snr_db,bits,errors,ber,theory_abep,seed.
/// Reals carry 17 significant digits so rows round-trip exactly.
void write_csv(const std::string& path, const SchemeConfig& cfg, std::uint64_t seed,
               const std::vector<BerRecord>& records);
std::vector<CsvRow> read_csv(const std::string& path);

/// Monte Carlo sweep to CSV. Returns the records written.
std::vector<BerRecord> run_experiment(const ExperimentSpec& spec, const SimOptions& opts = {});

/// Theory-only sweep to CSV (bits/errors zero, ber empty, bound attached).
std::vector<BerRecord> run_analysis(const ExperimentSpec& spec, const SimOptions& opts = {});

void print_tradeoff_table(std::ostream& os, int mirrors, int order, int tx);

/// Named figure-reproduction presets; expansion is pure data.
std::vector<std::string> preset_names();
std::vector<ExperimentSpec> expand_preset(const std::string& name,
                                          const std::string& out_dir = ".");

} // namespace stcm
