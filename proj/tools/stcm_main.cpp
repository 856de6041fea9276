// Command line front end: Monte Carlo sweeps, theory curves, trade-off
// tables and figure-reproduction presets, all emitting CSV.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stcm/experiment.hpp"

namespace {

struct CliArgs {
    std::string scheme = "stcm1";
    int mirrors = 2;
    int order = 2;
    int rx = 1;
    int tx = 0;                 // SSK antenna count (overrides mirrors)
    std::string mod = "auto";
    double snr_start = 0.0, snr_stop = 20.0, snr_step = 2.0;
    long long min_errors = 200;
    long long max_bits = 100'000'000;
    std::uint64_t seed = 1;
    bool theory = false;
    bool force_bruteforce = false;
    bool sampling = false;
    int workers = 0;
    std::string output = "stcm.csv";
};

stcm::ExperimentSpec to_spec(const CliArgs& a) {
    using namespace stcm;
    const Scheme scheme = parse_scheme(a.scheme);
    ExperimentSpec spec;
    if (scheme == Scheme::Ssk && a.tx > 0) {
        spec.cfg = make_ssk_config(a.tx, a.rx);
    } else {
        ModKind kind = a.mod == "auto" ? default_mod_kind(std::max(a.order, 2))
                       : a.mod == "psk" ? ModKind::Psk
                       : a.mod == "qam" ? ModKind::Qam
                       : throw std::invalid_argument("invalid value for field 'mod': " + a.mod);
        spec.cfg = make_config(scheme, a.mirrors, a.order, a.rx, kind);
    }
    spec.snr = {a.snr_start, a.snr_stop, a.snr_step};
    spec.stop = {a.min_errors, a.max_bits};
    spec.seed = a.seed;
    spec.with_theory = a.theory;
    spec.csv_path = a.output;
    return spec;
}

stcm::SimOptions to_options(const CliArgs& a) {
    stcm::SimOptions opts;
    opts.workers = a.workers;
    opts.force_bruteforce = a.force_bruteforce;
    opts.abep.sampling = a.sampling;
    return opts;
}

void add_scheme_flags(CLI::App* cmd, CliArgs& a) {
    cmd->add_option("--scheme", a.scheme, "simo ssk mbm-simo mbm-mimo alamouti stcm1 stcm2 stcm3");
    cmd->add_option("-M,--mirrors", a.mirrors, "RF mirrors per transmit antenna");
    cmd->add_option("-Q,--order", a.order, "constellation order (1 = index bits only)");
    cmd->add_option("-R,--rx", a.rx, "receive antennas");
    cmd->add_option("-T,--tx", a.tx, "SSK transmit antennas (power of two)");
    cmd->add_option("--mod", a.mod, "constellation kind: auto, psk, qam");
    cmd->add_option("--snr-start", a.snr_start, "first E_b/N_0 point [dB]");
    cmd->add_option("--snr-stop", a.snr_stop, "last E_b/N_0 point [dB]");
    cmd->add_option("--snr-step", a.snr_step, "E_b/N_0 step [dB]");
    cmd->add_option("--seed", a.seed, "random seed");
    cmd->add_option("-o,--output", a.output, "CSV output path");
    cmd->add_option("--workers", a.workers, "worker threads (0 = auto)")
        ->envname("STCM_WORKERS");
    cmd->add_flag("--sample-pairs", a.sampling, "sample codeword pairs past the enumeration cap");
    cmd->set_config("--config", "", "flat key=value config file");
}

void print_records(const std::vector<stcm::BerRecord>& records) {
    for (const auto& r : records) {
        std::printf("  %7.2f dB  bits %-12lld errors %-8lld", r.snr_db, r.bits, r.errors);
        if (r.bits > 0) std::printf("  ber %.3e", r.ber);
        if (r.theory) std::printf("  bound %.3e", *r.theory);
        std::printf("\n");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"space-time channel modulation link simulator"};
    app.require_subcommand(1);

    CliArgs args;

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo BER sweep to CSV");
    add_scheme_flags(simulate, args);
    simulate->add_option("--min-errors", args.min_errors, "stop after this many bit errors");
    simulate->add_option("--max-bits", args.max_bits, "hard bit budget per SNR point");
    simulate->add_flag("--theory", args.theory, "attach the ABEP union bound per point");
    simulate->add_flag("--force-bruteforce", args.force_bruteforce,
                       "use brute-force ML even where the conditional detector applies");

    auto* analyze = app.add_subcommand("analyze", "theory-only ABEP curve to CSV");
    add_scheme_flags(analyze, args);

    int tab_m = 4, tab_q = 2, tab_t = 4;
    auto* table = app.add_subcommand("table", "rate / diversity / complexity comparison");
    table->add_option("-M,--mirrors", tab_m, "RF mirrors per transmit antenna");
    table->add_option("-Q,--order", tab_q, "constellation order");
    table->add_option("-T,--tx", tab_t, "antenna count for the STBC-SM row");

    std::string preset_name;
    std::string preset_dir = ".";
    bool preset_list = false;
    std::uint64_t preset_seed = 1;
    int preset_workers = 0;
    auto* preset = app.add_subcommand("preset", "run a figure-reproduction preset");
    preset->add_option("name", preset_name, "preset name");
    preset->add_option("-o,--out-dir", preset_dir, "directory for the CSV files");
    preset->add_option("--seed", preset_seed, "random seed");
    preset->add_option("--workers", preset_workers, "worker threads (0 = auto)")
        ->envname("STCM_WORKERS");
    preset->add_flag("--list", preset_list, "list available presets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) {
            const auto spec = to_spec(args);
            const auto records = run_experiment(spec, to_options(args));
            std::printf("%s -> %s\n", stcm::scheme_name(spec.cfg.scheme).c_str(),
                        spec.csv_path.c_str());
            print_records(records);
        } else if (analyze->parsed()) {
            const auto spec = to_spec(args);
            const auto records = run_analysis(spec, to_options(args));
            std::printf("%s theory -> %s\n", stcm::scheme_name(spec.cfg.scheme).c_str(),
                        spec.csv_path.c_str());
            print_records(records);
            std::printf("\n");
            stcm::print_tradeoff_table(std::cout, spec.cfg.mirrors, std::max(spec.cfg.order, 2),
                                       4);
        } else if (table->parsed()) {
            stcm::print_tradeoff_table(std::cout, tab_m, tab_q, tab_t);
        } else if (preset->parsed()) {
            if (preset_list || preset_name.empty()) {
                for (const auto& n : stcm::preset_names()) std::printf("%s\n", n.c_str());
                return 0;
            }
            stcm::SimOptions opts;
            opts.workers = preset_workers;
            for (const auto& spec : stcm::expand_preset(preset_name, preset_dir)) {
                stcm::ExperimentSpec s = spec;
                s.seed = preset_seed;
                std::printf("%s (%s, M=%d, Q=%d, R=%d)\n", s.name.c_str(),
                            stcm::scheme_name(s.cfg.scheme).c_str(), s.cfg.mirrors,
                            s.cfg.order, s.cfg.rx);
                print_records(run_experiment(s, opts));
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
