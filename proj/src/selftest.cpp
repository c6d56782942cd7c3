// SPDX-License-Identifier: Apache-2.0
#include "qpenc/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "qpenc/runners.hpp"

namespace qpenc {

namespace {

// Pinned suite parameters.
const std::vector<std::size_t> kDistanceKs{1, 2, 3, 4, 5, 6};
const std::vector<std::size_t> kChannelKs{1, 2, 3, 4};
const std::vector<std::size_t> kBreidbartKs{1, 2, 3, 4, 5, 6};
const std::vector<std::size_t> kScanKs{1, 2, 3, 4};
const std::vector<std::size_t> kUnicityKs{4, 6};
constexpr long long kMcTrials = 100000;
constexpr std::size_t kScanGrid = 256;
constexpr std::size_t kPovmSuite = 100;
constexpr std::size_t kUnicityN = 64;
constexpr std::size_t kUnicityL = 8;
constexpr std::size_t kUnicityRuns = 100;
constexpr long long kProtocolMcTrials = 1000;
constexpr std::size_t kProtocolExhaustiveK = 4;

using RecordSet = std::vector<ExperimentRecord>;

void append(RecordSet& all, RecordSet part) {
    for (auto& r : part) all.push_back(std::move(r));
}

std::vector<const ExperimentRecord*> select(const RecordSet& records, const std::string& prefix) {
    std::vector<const ExperimentRecord*> out;
    for (const auto& r : records)
        if (r.experiment.rfind(prefix, 0) == 0) out.push_back(&r);
    return out;
}

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
};

std::string brief(double v) { return format_double(v); }

}  // namespace

bool SelftestReport::all_pass() const {
    for (const auto& c : criteria)
        if (!c.pass) return false;
    return true;
}

std::vector<ExperimentRecord> selftest_records(std::uint64_t seed) {
    RecordSet all;
    append(all, run_distance(kDistanceKs, seed));
    append(all, run_recursion_check(kDistanceKs, seed));
    append(all, run_channel_check(kChannelKs, seed));
    append(all, run_sigma_distance(kDistanceKs, seed));
    append(all, run_breidbart(kBreidbartKs, kMcTrials, seed));
    append(all, run_scan(kScanKs, kScanGrid, seed));
    append(all, run_protocol_check(kProtocolExhaustiveK, kProtocolMcTrials, seed));
    append(all, run_nosignal(kMcTrials, kPovmSuite, seed));
    append(all, run_unicity(kUnicityKs, kUnicityN, kUnicityL, kUnicityRuns, seed));
    append(all, run_complexity_grid(seed));
    return all;
}

SelftestReport run_selftest(std::uint64_t seed) {
    SelftestReport report;
    RecordSet all;

    // 1. trace-distance closed form, with the 10 s runtime bound.
    {
        const auto start = std::chrono::steady_clock::now();
        RecordSet rows = run_distance(kDistanceKs, seed);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        Check c;
        double worst = 0.0;
        for (const auto& r : rows) {
            worst = std::max(worst, r.abs_err);
            c.require(r.abs_err < 1e-9, "k=" + std::to_string(r.k) + " err " + brief(r.abs_err));
        }
        c.require(elapsed < 10.0, "runtime " + brief(elapsed) + " s exceeds 10 s");
        c.detail << (c.detail.tellp() > 0 ? "; " : "") << "max err " << brief(worst) << ", "
                 << brief(elapsed) << " s";
        report.criteria.push_back({1, "trace-distance closed form (sqrt2/2)^k, k=1..6", c.pass,
                                   c.detail.str()});
        append(all, std::move(rows));
    }

    // 2. recursion equals direct enumeration.
    {
        RecordSet rows = run_recursion_check(kDistanceKs, seed);
        Check c;
        double worst = 0.0;
        for (const auto& r : rows) {
            worst = std::max(worst, r.observed);
            c.require(r.observed < 1e-12,
                      r.experiment + " k=" + std::to_string(r.k) + " gap " + brief(r.observed));
        }
        c.detail << (c.detail.tellp() > 0 ? "; " : "") << "max gap " << brief(worst);
        report.criteria.push_back(
            {2, "recursion consistency rho_b^k, k=1..6", c.pass, c.detail.str()});
        append(all, std::move(rows));
    }

    // 3. channel identity and Kraus completeness.
    {
        RecordSet rows = run_channel_check(kChannelKs, seed);
        Check c;
        double worst = 0.0;
        for (const auto& r : rows) {
            worst = std::max(worst, r.observed);
            c.require(r.observed < 1e-12,
                      r.experiment + " k=" + std::to_string(r.k) + " gap " + brief(r.observed));
        }
        c.detail << (c.detail.tellp() > 0 ? "; " : "") << "max gap " << brief(worst);
        report.criteria.push_back(
            {3, "mixing channel maps sigma_b to rho_b, k=1..4", c.pass, c.detail.str()});
        append(all, std::move(rows));
    }

    // 4. sigma-state distance.
    {
        RecordSet rows = run_sigma_distance(kDistanceKs, seed);
        Check c;
        double worst = 0.0;
        for (const auto& r : rows) {
            worst = std::max(worst, r.abs_err);
            c.require(r.abs_err < 1e-9, "k=" + std::to_string(r.k) + " err " + brief(r.abs_err));
        }
        c.detail << (c.detail.tellp() > 0 ? "; " : "") << "max err " << brief(worst);
        report.criteria.push_back(
            {4, "sigma-state distance (sin pi/4)^k, k=1..6", c.pass, c.detail.str()});
        append(all, std::move(rows));
    }

    // 5. Breidbart probabilities, closed-form differences, Monte Carlo.
    RecordSet breidbart_rows = run_breidbart(kBreidbartKs, kMcTrials, seed);
    {
        Check c;
        for (const auto* r : select(breidbart_rows, "breidbart-p0"))
            c.require(r->abs_err < 1e-12, "P_0 err " + brief(r->abs_err));
        for (const auto* r : select(breidbart_rows, "breidbart-prob-diff-dev"))
            c.require(r->observed < 1e-12,
                      "k=" + std::to_string(r->k) + " diff dev " + brief(r->observed));
        for (const auto* r : select(breidbart_rows, "breidbart-mc")) {
            const double p = r->analytic;
            const double sigma =
                std::sqrt(p * (1.0 - p) / static_cast<double>(r->trials));
            c.require(r->abs_err <= 3.0 * sigma, "k=" + std::to_string(r->k) + " MC dev " +
                                                     brief(r->abs_err) + " > 3 sigma " +
                                                     brief(3.0 * sigma));
        }
        if (c.detail.tellp() == 0) c.detail << "exact to 1e-12, MC within 3 sigma";
        report.criteria.push_back(
            {5, "Breidbart probabilities and closed-form differences", c.pass, c.detail.str()});
    }

    // 6. Helstrom saturation and scan ceiling.
    RecordSet scan_rows = run_scan(kScanKs, kScanGrid, seed);
    {
        Check c;
        for (const auto* r : select(breidbart_rows, "helstrom-saturation"))
            c.require(r->abs_err < 1e-9,
                      "k=" + std::to_string(r->k) + " gap " + brief(r->abs_err));
        for (const auto* r : select(scan_rows, "scan-best-distance"))
            c.require(r->observed <= r->analytic + 1e-9,
                      "k=" + std::to_string(r->k) + " scan exceeds trace distance by " +
                          brief(r->observed - r->analytic));
        for (const auto* r : select(scan_rows, "scan-argmax-angle"))
            c.require(r->abs_err < 1e-12,
                      "k=" + std::to_string(r->k) + " argmax angle off pi/8");
        if (c.detail.tellp() == 0) c.detail << "classical equals quantum distance, scan below bound";
        report.criteria.push_back(
            {6, "Helstrom saturation by the Breidbart POVM, k=1..6", c.pass, c.detail.str()});
    }
    append(all, std::move(breidbart_rows));
    append(all, std::move(scan_rows));

    // 7. protocol round-trip correctness.
    {
        RecordSet rows = run_protocol_check(kProtocolExhaustiveK, kProtocolMcTrials, seed);
        Check c;
        for (const auto& r : rows)
            c.require(r.observed == 1.0, r.experiment + " rate " + brief(r.observed));
        if (c.detail.tellp() == 0) {
            c.detail << "exhaustive k<=" << kProtocolExhaustiveK << " and " << kProtocolMcTrials
                     << "/" << kProtocolMcTrials << " at k=8";
        }
        report.criteria.push_back({7, "protocol decrypts with probability 1", c.pass, c.detail.str()});
        append(all, std::move(rows));
    }

    // 8. no-signalling.
    {
        RecordSet rows = run_nosignal(kMcTrials, kPovmSuite, seed);
        Check c;
        for (const auto& r : rows) {
            if (r.experiment == "nosignal-marginal-distance")
                c.require(r.observed < 1e-15, "marginal distance " + brief(r.observed));
            else if (r.experiment == "nosignal-max-advantage")
                c.require(r.observed < 1e-12, "advantage " + brief(r.observed));
            else {
                // Entries are means of values bounded by 1, so 3 sigma is
                // at most 1.5/sqrt(trials).
                const double bound = 1.5 / std::sqrt(static_cast<double>(r.trials));
                c.require(r.observed <= bound,
                          r.experiment + " dev " + brief(r.observed) + " > " + brief(bound));
            }
        }
        if (c.detail.tellp() == 0)
            c.detail << "zero advantage over " << kPovmSuite << " POVMs, marginals at I/2";
        report.criteria.push_back({8, "no-signalling marginals and advantage", c.pass, c.detail.str()});
        append(all, std::move(rows));
    }

    // 9. unicity budgets and success rates.
    {
        RecordSet rows = run_unicity(kUnicityKs, kUnicityN, kUnicityL, kUnicityRuns, seed);
        Check c;
        for (const auto& r : rows) {
            if (r.experiment == "unicity-prob-rate" || r.experiment == "unicity-det-rate")
                c.require(r.observed >= 0.99,
                          r.experiment + " k=" + std::to_string(r.k) + " rate " + brief(r.observed));
            else if (r.experiment == "unicity-prob-qubits" || r.experiment == "unicity-det-qubits")
                c.require(r.observed == r.analytic,
                          r.experiment + " k=" + std::to_string(r.k) + " consumed " +
                              brief(r.observed) + " != " + brief(r.analytic));
            else if (r.experiment == "unicity-ratio")
                c.require(r.observed == r.analytic,
                          "ratio k=" + std::to_string(r.k) + " " + brief(r.observed));
        }
        if (c.detail.tellp() == 0)
            c.detail << "rates >= 0.99 on exact budgets, ratio 2^k/2";
        report.criteria.push_back(
            {9, "unicity-distance budgets, k in {4,6}", c.pass, c.detail.str()});
        append(all, std::move(rows));
    }

    // 10. complexity closed forms, exact.
    {
        RecordSet rows = run_complexity_grid(seed);
        Check c;
        for (const auto& r : rows)
            c.require(r.observed == r.analytic,
                      r.experiment + " n=" + std::to_string(r.n) + " l=" + std::to_string(r.l));
        if (c.detail.tellp() == 0) c.detail << rows.size() << " values exact over 20 cases";
        report.criteria.push_back({10, "classical complexity closed forms", c.pass, c.detail.str()});
        append(all, std::move(rows));
    }

    // 11. determinism: regenerate the whole record set and compare bytes.
    {
        Check c;
        const RecordSet again = selftest_records(seed);
        c.require(csv_string(all) == csv_string(again), "CSV bytes differ between runs");
        c.require(json_string(all) == json_string(again), "JSON bytes differ between runs");
        if (c.detail.tellp() == 0) c.detail << "CSV and JSON byte-identical across regeneration";
        report.criteria.push_back({11, "deterministic output for a fixed seed", c.pass, c.detail.str()});
    }

    report.records = std::move(all);
    return report;
}

}  // namespace qpenc
