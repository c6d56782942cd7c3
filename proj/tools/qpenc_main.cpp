// SPDX-License-Identifier: Apache-2.0
//
// Experiment runner: every analysis in the library is exposed as a seeded,
// reproducible subcommand with CSV/JSON output.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpenc/experiment.hpp"
#include "qpenc/runners.hpp"
#include "qpenc/selftest.hpp"
#include "qpenc/version.hpp"

namespace {

using qpenc::ExperimentRecord;

// Accepts "4", "2,4,6" and "1..6".
std::vector<std::size_t> parse_k_list(const std::string& text) {
    std::vector<std::size_t> out;
    const auto range_pos = text.find("..");
    if (range_pos != std::string::npos) {
        const std::size_t lo = std::stoul(text.substr(0, range_pos));
        const std::size_t hi = std::stoul(text.substr(range_pos + 2));
        if (lo == 0 || hi < lo) throw CLI::ValidationError("--k", "bad range '" + text + "'");
        for (std::size_t k = lo; k <= hi; ++k) out.push_back(k);
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string token =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (token.empty()) throw CLI::ValidationError("--k", "bad list '" + text + "'");
        out.push_back(std::stoul(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw CLI::ValidationError("--k", "empty list");
    return out;
}

struct OutputOptions {
    std::string csv_path;
    std::string json_path;
    bool timings = false;
};

void add_common_options(CLI::App* cmd, std::uint64_t& seed, OutputOptions& out) {
    cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    cmd->add_option("--out,--csv", out.csv_path, "write CSV to this path");
    cmd->add_option("--json", out.json_path, "write JSON to this path");
    cmd->add_flag("--timings", out.timings,
                  "record measured wall time (breaks byte-for-byte reproducibility)");
}

int emit(std::vector<ExperimentRecord> records, const OutputOptions& out, double wall_ms) {
    if (out.timings)
        for (auto& r : records) r.wall_ms = wall_ms;
    if (!out.csv_path.empty()) qpenc::write_csv_file(out.csv_path, records);
    if (!out.json_path.empty()) qpenc::write_json_file(out.json_path, records);
    if (out.csv_path.empty() && out.json_path.empty()) qpenc::write_csv(std::cout, records);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(qpenc::kVersion) +
                 " - conjugate-coding probabilistic encryption laboratory"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    OutputOptions out;
    std::string k_text;
    std::size_t n = 16;
    long long trials = 100000;
    std::size_t grid = 256;
    std::size_t povms = 100;
    std::size_t cap_n = 64;
    std::size_t cap_l = 8;
    std::size_t runs = 100;

    auto* encrypt_demo = app.add_subcommand("encrypt-demo", "encrypt/decrypt round trip");
    encrypt_demo->add_option("--k", k_text, "key length")->default_val("4");
    encrypt_demo->add_option("--n", n, "message bits")->capture_default_str();
    encrypt_demo->add_option("--trials", trials, "round trips")->default_val("1000");
    add_common_options(encrypt_demo, seed, out);

    auto* distance = app.add_subcommand("distance", "trace distance of the cipher-state pair");
    distance->add_option("--k", k_text, "k values, e.g. 1..6 or 2,4")->default_val("1..6");
    std::size_t plaintext_n = 0;
    distance->add_option("--plaintexts", plaintext_n,
                         "also tabulate D for every pair of plaintexts of this length");
    add_common_options(distance, seed, out);

    auto* sigma = app.add_subcommand("sigma-distance", "trace distance of the sigma pair");
    sigma->add_option("--k", k_text, "k values")->default_val("1..6");
    add_common_options(sigma, seed, out);

    auto* channel = app.add_subcommand("channel-check", "mixing channel identity and completeness");
    channel->add_option("--k", k_text, "k values")->default_val("1..4");
    add_common_options(channel, seed, out);

    auto* breidbart = app.add_subcommand("breidbart", "Breidbart measurement statistics");
    breidbart->add_option("--k", k_text, "k values")->default_val("1..4");
    breidbart->add_option("--trials", trials, "Monte Carlo draws")->capture_default_str();
    add_common_options(breidbart, seed, out);

    auto* scan = app.add_subcommand("scan", "product-basis measurement family scan");
    scan->add_option("--k", k_text, "k values (1..4)")->default_val("1..4");
    scan->add_option("--grid", grid, "angles per scan")->capture_default_str();
    add_common_options(scan, seed, out);

    auto* nosignal = app.add_subcommand("nosignal", "entangled-channel marginal checks");
    nosignal->add_option("--trials", trials, "measurement trials")->capture_default_str();
    nosignal->add_option("--povms", povms, "random POVMs to test")->capture_default_str();
    add_common_options(nosignal, seed, out);

    auto* unicity = app.add_subcommand("unicity", "key-recovery consumption experiments");
    unicity->add_option("--k", k_text, "even key lengths")->default_val("4");
    unicity->add_option("--N", cap_n, "detector sample length")->capture_default_str();
    unicity->add_option("--L", cap_l, "linear-complexity bound")->capture_default_str();
    unicity->add_option("--runs", runs, "seeded runs per scheme")->capture_default_str();
    add_common_options(unicity, seed, out);

    auto* complexity = app.add_subcommand("complexity", "classical wrapper cost formulas");
    add_common_options(complexity, seed, out);

    auto* selftest = app.add_subcommand("selftest", "run the full verification suite");
    add_common_options(selftest, seed, out);

    CLI11_PARSE(app, argc, argv);

    try {
        const auto start = std::chrono::steady_clock::now();
        auto elapsed_ms = [&start]() {
            return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             start)
                .count();
        };

        if (encrypt_demo->parsed())
            return emit(qpenc::run_encrypt_demo(parse_k_list(k_text).front(), n, trials, seed), out,
                        elapsed_ms());
        if (distance->parsed()) {
            auto records = qpenc::run_distance(parse_k_list(k_text), seed);
            if (plaintext_n > 0)
                for (std::size_t k : parse_k_list(k_text))
                    for (auto& r : qpenc::run_plaintext_table(plaintext_n, k, seed))
                        records.push_back(std::move(r));
            return emit(std::move(records), out, elapsed_ms());
        }
        if (sigma->parsed())
            return emit(qpenc::run_sigma_distance(parse_k_list(k_text), seed), out, elapsed_ms());
        if (channel->parsed())
            return emit(qpenc::run_channel_check(parse_k_list(k_text), seed), out, elapsed_ms());
        if (breidbart->parsed())
            return emit(qpenc::run_breidbart(parse_k_list(k_text), trials, seed), out,
                        elapsed_ms());
        if (scan->parsed())
            return emit(qpenc::run_scan(parse_k_list(k_text), grid, seed), out, elapsed_ms());
        if (nosignal->parsed())
            return emit(qpenc::run_nosignal(trials, povms, seed), out, elapsed_ms());
        if (unicity->parsed())
            return emit(qpenc::run_unicity(parse_k_list(k_text), cap_n, cap_l, runs, seed), out,
                        elapsed_ms());
        if (complexity->parsed())
            return emit(qpenc::run_complexity_grid(seed), out, elapsed_ms());
        if (selftest->parsed()) {
            const qpenc::SelftestReport report = qpenc::run_selftest(seed);
            for (const auto& c : report.criteria) {
                std::cout << (c.pass ? "PASS" : "FAIL") << "  [" << c.index << "/11] " << c.name
                          << " - " << c.detail << "\n";
            }
            std::cout << (report.all_pass() ? "selftest: all criteria passed"
                                            : "selftest: FAILURES present")
                      << "\n";
            // The pass/fail table owns stdout; records go to files only.
            std::vector<ExperimentRecord> records = report.records;
            if (out.timings)
                for (auto& r : records) r.wall_ms = elapsed_ms();
            if (!out.csv_path.empty()) qpenc::write_csv_file(out.csv_path, records);
            if (!out.json_path.empty()) qpenc::write_json_file(out.json_path, records);
            return report.all_pass() ? 0 : 1;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
