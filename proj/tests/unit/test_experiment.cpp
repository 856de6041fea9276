#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "stcm/experiment.hpp"

using namespace stcm;

namespace {

std::string temp_csv(const char* tag) {
    return (std::filesystem::temp_directory_path() / (std::string("stcm_test_") + tag + ".csv"))
        .string();
}

} // namespace

TEST_CASE("CSV round-trips records exactly") {
    const auto cfg = make_config(Scheme::Stcm2, 3, 4, 2, ModKind::Qam);
    std::vector<BerRecord> records;
    BerRecord a;
    a.snr_db = 3.125;
    a.bits = 123456789;
    a.errors = 321;
    a.ber = static_cast<double>(a.errors) / a.bits;
    a.theory = 0.00012345678901234567;
    records.push_back(a);
    BerRecord b;
    b.snr_db = -2.5;
    b.bits = 1000;
    b.errors = 0;
    b.ber = 0.0;
    records.push_back(b); // no theory

    const auto path = temp_csv("roundtrip");
    write_csv(path, cfg, 42, records);
    const auto rows = read_csv(path);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].scheme == "stcm2");
    CHECK(rows[0].mirrors == 3);
    CHECK(rows[0].order == 4);
    CHECK(rows[0].rx == 2);
    CHECK(rows[0].snr_db == a.snr_db);
    CHECK(rows[0].bits == a.bits);
    CHECK(rows[0].errors == a.errors);
    CHECK(*rows[0].ber == a.ber);
    CHECK(*rows[0].theory == *a.theory);
    CHECK(rows[0].seed == 42);
    CHECK_FALSE(rows[1].theory.has_value());
    CHECK(*rows[1].ber == 0.0);
    std::filesystem::remove(path);
}

TEST_CASE("CSV uses LF line endings and the specified header") {
    const auto cfg = make_config(Scheme::MbmSimo, 2, 1, 1);
    const auto path = temp_csv("header");
    write_csv(path, cfg, 1, {BerRecord{1.0, 10, 1, 0.1, std::nullopt, 0.0}});
    std::ifstream is(path, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    CHECK(content.rfind("scheme,M,Q,R,snr_db,bits,errors,ber,theory_abep,seed\n", 0) == 0);
    CHECK(content.find('\r') == std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("run_experiment writes one row per SNR point") {
    ExperimentSpec spec;
    spec.cfg = make_config(Scheme::Alamouti, 0, 2, 2, ModKind::Psk);
    spec.snr = {0.0, 6.0, 3.0};
    spec.stop = {50, 20'000};
    spec.seed = 9;
    spec.with_theory = true;
    spec.csv_path = temp_csv("exp");
    const auto records = run_experiment(spec);
    CHECK(records.size() == 3);
    const auto rows = read_csv(spec.csv_path);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].bits == records[i].bits);
        CHECK(rows[i].errors == records[i].errors);
        CHECK(*rows[i].theory == *records[i].theory);
    }
    std::filesystem::remove(spec.csv_path);
}

TEST_CASE("run_analysis emits monotone decreasing theory with empty ber") {
    ExperimentSpec spec;
    spec.cfg = make_config(Scheme::Stcm2, 2, 4, 2, ModKind::Qam);
    spec.snr = {0.0, 16.0, 4.0};
    spec.csv_path = temp_csv("theory");
    const auto records = run_analysis(spec);
    REQUIRE(records.size() == 5);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].bits == 0);
        REQUIRE(records[i].theory.has_value());
        if (i > 0) CHECK(*records[i].theory < *records[i - 1].theory);
    }
    const auto rows = read_csv(spec.csv_path);
    CHECK_FALSE(rows[0].ber.has_value());
    std::filesystem::remove(spec.csv_path);
}

TEST_CASE("invalid experiment fields are named") {
    ExperimentSpec spec;
    spec.cfg = make_config(Scheme::Alamouti, 0, 2, 1, ModKind::Psk);
    spec.snr = {4.0, 0.0, 2.0};
    CHECK_THROWS_WITH_AS(run_experiment(spec), doctest::Contains("snr_start"),
                         std::invalid_argument);
    spec.snr = {0.0, 4.0, 0.0};
    CHECK_THROWS_WITH_AS(run_experiment(spec), doctest::Contains("snr_step"),
                         std::invalid_argument);
    spec.snr = {0.0, 4.0, 2.0};
    spec.csv_path = "/nonexistent-dir/x.csv";
    CHECK_THROWS_AS(run_experiment(spec), std::runtime_error);
}

TEST_CASE("preset expansion is pure data") {
    for (const auto& name : preset_names()) {
        const auto a = expand_preset(name, "/tmp");
        const auto b = expand_preset(name, "/tmp");
        REQUIRE(a.size() == b.size());
        CHECK(!a.empty());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].name == b[i].name);
            CHECK(a[i].csv_path == b[i].csv_path);
            CHECK(a[i].cfg.scheme == b[i].cfg.scheme);
            CHECK(a[i].cfg.mirrors == b[i].cfg.mirrors);
            CHECK(a[i].cfg.order == b[i].cfg.order);
            CHECK(a[i].cfg.rx == b[i].cfg.rx);
            CHECK(a[i].snr.start == b[i].snr.start);
            CHECK(a[i].snr.stop == b[i].snr.stop);
            CHECK(a[i].snr.step == b[i].snr.step);
            CHECK(a[i].seed == b[i].seed);
        }
    }
    CHECK_THROWS_AS(expand_preset("fig3"), std::invalid_argument);
}

TEST_CASE("fig4 preset covers the three schemes at M=4, eta=5, with theory") {
    const auto specs = expand_preset("fig4", "/tmp");
    REQUIRE(specs.size() == 6);
    int stcm1 = 0, stcm2 = 0, stcm3 = 0;
    for (const auto& s : specs) {
        CHECK(s.cfg.mirrors == 4);
        CHECK(s.cfg.bpcu() == doctest::Approx(5.0));
        CHECK(s.with_theory);
        CHECK((s.cfg.rx == 2 || s.cfg.rx == 4));
        stcm1 += s.cfg.scheme == Scheme::Stcm1;
        stcm2 += s.cfg.scheme == Scheme::Stcm2;
        stcm3 += s.cfg.scheme == Scheme::Stcm3;
    }
    CHECK(stcm1 == 2);
    CHECK(stcm2 == 2);
    CHECK(stcm3 == 2);
}

TEST_CASE("fig1 preset pairs classical SIMO with MBM at R=8") {
    const auto specs = expand_preset("fig1", "/tmp");
    CHECK(!specs.empty());
    bool saw_simo = false, saw_mbm = false;
    for (const auto& s : specs) {
        CHECK(s.cfg.rx == 8);
        CHECK(s.with_theory);
        saw_simo |= s.cfg.scheme == Scheme::ClassicalSimo;
        saw_mbm |= s.cfg.scheme == Scheme::MbmSimo;
    }
    CHECK(saw_simo);
    CHECK(saw_mbm);
}

TEST_CASE("eta matches between fig5 curves") {
    for (const auto& s : expand_preset("fig5", "/tmp")) CHECK(s.cfg.bpcu() == doctest::Approx(5.0));
    for (const auto& s : expand_preset("fig6", "/tmp")) CHECK(s.cfg.bpcu() == doctest::Approx(6.0));
}
