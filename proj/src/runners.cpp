// SPDX-License-Identifier: Apache-2.0
#include "qpenc/runners.hpp"

#include <algorithm>
#include <cmath>

#include "qpenc/attacks.hpp"
#include "qpenc/classical.hpp"
#include "qpenc/densities.hpp"
#include "qpenc/nosignal.hpp"
#include "qpenc/parallel.hpp"
#include "qpenc/rng.hpp"
#include "qpenc/scheme.hpp"
#include "qpenc/unicity.hpp"

namespace qpenc {

namespace {

const double kPi = 3.14159265358979323846;

ExperimentRecord with_k(ExperimentRecord r, std::size_t k) {
    r.k = static_cast<long long>(k);
    return r;
}

}  // namespace

std::vector<ExperimentRecord> run_distance(const std::vector<std::size_t>& ks, std::uint64_t seed) {
    std::vector<ExperimentRecord> records;
    for (std::size_t k : ks) {
        const double observed = trace_distance(rho_b_direct(0, k), rho_b_direct(1, k));
        records.push_back(with_k(make_record("trace-distance", seed, observed, analytic_distance(k)), k));
    }
    return records;
}

std::vector<ExperimentRecord> run_plaintext_table(std::size_t n, std::size_t k,
                                                  std::uint64_t seed) {
    std::vector<ExperimentRecord> records;
    const auto plaintexts = all_bit_strings(n);
    for (std::size_t i = 0; i < plaintexts.size(); ++i) {
        const DensityOperator rho_x = plaintext_density(plaintexts[i], k);
        for (std::size_t j = i + 1; j < plaintexts.size(); ++j) {
            const double d = trace_distance(rho_x, plaintext_density(plaintexts[j], k));
            auto rec = make_record("plaintext-distance-" + to_string(plaintexts[i]) + "-vs-" +
                                       to_string(plaintexts[j]),
                                   seed, d, 0.0);
            rec.abs_err = 0.0;
            rec.k = static_cast<long long>(k);
            rec.n = static_cast<long long>(n);
            records.push_back(rec);
        }
    }
    return records;
}

std::vector<ExperimentRecord> run_recursion_check(const std::vector<std::size_t>& ks,
                                                  std::uint64_t seed) {
    std::vector<ExperimentRecord> records;
    for (std::size_t k : ks) {
        for (int b : {0, 1}) {
            const double gap =
                rho_b_recursive(b, k).matrix().max_abs_diff(rho_b_direct(b, k).matrix());
            records.push_back(with_k(
                make_record("recursion-consistency-b" + std::to_string(b), seed, gap, 0.0), k));
        }
    }
    return records;
}

std::vector<ExperimentRecord> run_sigma_distance(const std::vector<std::size_t>& ks,
                                                 std::uint64_t seed) {
    std::vector<ExperimentRecord> records;
    for (std::size_t k : ks) {
        const double observed = trace_distance(sigma_b(0, k), sigma_b(1, k));
        const double analytic = std::pow(std::sin(kPi / 4.0), static_cast<double>(k));
        records.push_back(with_k(make_record("sigma-distance", seed, observed, analytic), k));
    }
    return records;
}

std::vector<ExperimentRecord> run_channel_check(const std::vector<std::size_t>& ks,
                                                std::uint64_t seed) {
    std::vector<ExperimentRecord> records;
    for (std::size_t k : ks) {
        for (int b : {0, 1}) {
            const double gap = hadamard_mixing_channel(sigma_b(b, k), k)
                                   .matrix()
                                   .max_abs_diff(rho_b_direct(b, k).matrix());
            records.push_back(with_k(
                make_record("channel-identity-b" + std::to_string(b), seed, gap, 0.0), k));
        }
        ComplexMatrix completeness(std::size_t{1} << k);
        for (const auto& u : hadamard_kraus(k)) completeness += u.adjoint() * u;
        const double defect =
            completeness.max_abs_diff(ComplexMatrix::identity(std::size_t{1} << k));
        records.push_back(with_k(make_record("kraus-completeness", seed, defect, 0.0), k));
    }
    return records;
}

std::vector<ExperimentRecord> run_breidbart(const std::vector<std::size_t>& ks, long long trials,
                                            std::uint64_t seed) {
    std::vector<ExperimentRecord> records;
    Rng rng = Rng(seed).derive("breidbart");

    {
        const auto dist = outcome_distribution(rho_b_direct(0, 1), breidbart_povm(1));
        const double analytic = std::cos(kPi / 8.0) * std::cos(kPi / 8.0);
        records.push_back(with_k(make_record("breidbart-p0", seed, dist.at("0"), analytic), 1));
    }

    for (std::size_t k : ks) {
        const Povm povm = breidbart_povm(k);
        const DensityOperator rho0 = rho_b_direct(0, k);
        const auto beta = outcome_distribution(rho0, povm);
        const auto gamma = outcome_distribution(rho_b_direct(1, k), povm);

        if (k <= 4) {
            double worst = 0.0;
            for (const auto& r : all_bit_strings(k)) {
                const std::string label = to_string(r);
                const double exact = beta.at(label) - gamma.at(label);
                worst = std::max(worst, std::abs(exact - breidbart_prob_difference(r, k)));
            }
            auto rec = with_k(make_record("breidbart-prob-diff-dev", seed, worst, 0.0), k);
            records.push_back(rec);
        }

        records.push_back(with_k(make_record("helstrom-saturation", seed,
                                             kolmogorov_distance(beta, gamma),
                                             trace_distance(rho0, rho_b_direct(1, k))),
                                 k));

        if (trials > 0) {
            const std::string all_zero(k, '0');
            Rng mc = rng.derive("mc").derive(k);
            long long hits = 0;
            for (long long t = 0; t < trials; ++t)
                if (sample_outcome(beta, mc) == all_zero) ++hits;
            auto rec = with_k(make_record("breidbart-mc", seed,
                                          static_cast<double>(hits) / static_cast<double>(trials),
                                          beta.at(all_zero)),
                              k);
            rec.trials = trials;
            records.push_back(rec);
        }
    }
    return records;
}

std::vector<ExperimentRecord> run_scan(const std::vector<std::size_t>& ks, std::size_t grid_size,
                                       std::uint64_t seed) {
    std::vector<ExperimentRecord> records;
    for (std::size_t k : ks) {
        const ScanResult scan = measurement_family_scan(k, grid_size);
        const double quantum = trace_distance(rho_b_direct(0, k), rho_b_direct(1, k));
        auto best = with_k(make_record("scan-best-distance", seed, scan.best_distance, quantum), k);
        best.trials = static_cast<long long>(grid_size);
        records.push_back(best);
        auto angle = with_k(make_record("scan-argmax-angle", seed, scan.best_angle, kPi / 8.0), k);
        angle.trials = static_cast<long long>(grid_size);
        records.push_back(angle);
    }
    return records;
}

std::vector<ExperimentRecord> run_protocol_check(std::size_t exhaustive_k_max, long long mc_trials,
                                                 std::uint64_t seed) {
    std::vector<ExperimentRecord> records;
    Rng rng = Rng(seed).derive("protocol");

    long long cases = 0;
    long long good = 0;
    for (std::size_t k = 1; k <= exhaustive_k_max; ++k) {
        for (const auto& s : all_bit_strings(k)) {
            const Key key{s};
            for (int m : {0, 1}) {
                for (const auto& rbits : parity_class(m, k)) {
                    // Matching bases: the decrypt path never touches the rng.
                    Rng unused(0);
                    const ParityString r(rbits, m);
                    ++cases;
                    if (decrypt_bit(encode_bit(m, key, r), key, unused) == m) ++good;
                }
            }
        }
    }
    auto exhaustive = make_record("roundtrip-exhaustive", seed,
                                  static_cast<double>(good) / static_cast<double>(cases), 1.0);
    exhaustive.k = static_cast<long long>(exhaustive_k_max);
    exhaustive.trials = cases;
    records.push_back(exhaustive);

    const std::size_t mc_k = 8;
    long long mc_good = 0;
    for (long long t = 0; t < mc_trials; ++t) {
        Rng trial = rng.derive(static_cast<std::uint64_t>(t));
        const Key key{trial.next_bits(mc_k)};
        const int m = trial.next_bit();
        const ParityString r = sample_parity_string(m, mc_k, trial);
        if (decrypt_bit(encode_bit(m, key, r), key, trial) == m) ++mc_good;
    }
    auto mc = make_record("roundtrip-mc", seed,
                          static_cast<double>(mc_good) / static_cast<double>(mc_trials), 1.0);
    mc.k = static_cast<long long>(mc_k);
    mc.trials = mc_trials;
    records.push_back(mc);
    return records;
}

std::vector<ExperimentRecord> run_nosignal(long long trials, std::size_t n_povms,
                                           std::uint64_t seed) {
    std::vector<ExperimentRecord> records;
    Rng rng = Rng(seed).derive("nosignal");

    records.push_back(
        make_record("nosignal-marginal-distance", seed,
                    trace_distance(eve_marginal(0), eve_marginal(1)), 0.0));

    std::vector<double> advantages(n_povms);
    parallel_for(n_povms, [&](std::size_t i) {
        Rng povm_rng = rng.derive("povm").derive(i);
        const std::size_t elements = 2 + povm_rng.next_below(3);
        advantages[i] = signalling_advantage(random_povm(2, elements, povm_rng));
    });
    double max_adv = 0.0;
    for (double a : advantages) max_adv = std::max(max_adv, a);
    auto adv = make_record("nosignal-max-advantage", seed, max_adv, 0.0);
    adv.trials = static_cast<long long>(n_povms);
    records.push_back(adv);

    for (int b : {0, 1}) {
        Rng trial_rng = rng.derive("trials").derive(static_cast<std::uint64_t>(b));
        ComplexMatrix mean(2);
        for (long long t = 0; t < trials; ++t)
            mean += alice_measure(b, trial_rng).eve_state.matrix();
        mean *= cplx{1.0 / static_cast<double>(trials), 0.0};
        ComplexMatrix half = ComplexMatrix::identity(2);
        half *= cplx{0.5, 0.0};
        auto rec = make_record("nosignal-empirical-dev-b" + std::to_string(b), seed,
                               mean.max_abs_diff(half), 0.0);
        rec.trials = trials;
        records.push_back(rec);
    }
    return records;
}

std::vector<ExperimentRecord> run_unicity(const std::vector<std::size_t>& ks, std::size_t N,
                                          std::size_t L, std::size_t runs, std::uint64_t seed) {
    std::vector<ExperimentRecord> records;
    const DetectorConfig cfg{N, L};
    Rng rng = Rng(seed).derive("unicity");

    for (std::size_t k : ks) {
        struct Outcome {
            bool success;
            std::size_t consumed;
        };
        std::vector<Outcome> prob(runs), det(runs);
        parallel_for(runs, [&](std::size_t run) {
            Rng prob_rng = rng.derive("prob").derive(k).derive(run);
            const AttackReport r = attack_probabilistic(k, cfg, prob_rng);
            prob[run] = Outcome{r.success, r.qubits_consumed};
        });
        parallel_for(runs, [&](std::size_t run) {
            Rng det_rng = rng.derive("det").derive(k).derive(run);
            const AttackReport r = attack_deterministic(k, cfg, det_rng);
            det[run] = Outcome{r.success, r.qubits_consumed};
        });

        const auto summarize = [&](const std::vector<Outcome>& outcomes, const char* scheme,
                                   double budget) {
            std::size_t successes = 0;
            double consumed = outcomes.front().consumed;
            bool constant = true;
            for (const auto& o : outcomes) {
                successes += o.success ? 1 : 0;
                constant = constant && o.consumed == outcomes.front().consumed;
            }
            auto rate = with_k(make_record(std::string("unicity-") + scheme + "-rate", seed,
                                           static_cast<double>(successes) /
                                               static_cast<double>(outcomes.size()),
                                           1.0),
                               k);
            rate.N = static_cast<long long>(N);
            rate.L = static_cast<long long>(L);
            rate.trials = static_cast<long long>(outcomes.size());
            records.push_back(rate);

            auto qubits = with_k(make_record(std::string("unicity-") + scheme + "-qubits", seed,
                                             constant ? consumed : -1.0, budget),
                                 k);
            qubits.N = static_cast<long long>(N);
            qubits.L = static_cast<long long>(L);
            qubits.trials = static_cast<long long>(outcomes.size());
            records.push_back(qubits);
        };
        summarize(prob, "prob", static_cast<double>(k * (std::size_t{1} << k) * N));
        summarize(det, "det", static_cast<double>(2 * k * N));

        auto ratio = with_k(
            make_record("unicity-ratio", seed,
                        static_cast<double>(prob.front().consumed) /
                            static_cast<double>(det.front().consumed),
                        std::pow(2.0, static_cast<double>(k)) / 2.0),
            k);
        ratio.N = static_cast<long long>(N);
        ratio.L = static_cast<long long>(L);
        records.push_back(ratio);
    }
    return records;
}

std::vector<ExperimentRecord> run_complexity_grid(std::uint64_t seed) {
    std::vector<ExperimentRecord> records;
    const std::size_t k = 8;
    const double t1 = 1.0, t2 = 1.0, t3 = 1.0, t4 = 1.0;
    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::size_t l : {1, 2, 3, 4}) {
            const ComplexityEstimates est =
                complexity_estimates(ComplexityProfile{t1, t2, t3, t4, n, k, l});
            // References evaluated by plain arithmetic, no pow.
            const double nd = static_cast<double>(n);
            const double ld = static_cast<double>(l);
            double l_pow_n = 1.0;
            for (std::size_t i = 0; i < n; ++i) l_pow_n *= ld;
            double two_pow_k = 1.0;
            for (std::size_t i = 0; i < k; ++i) two_pow_k *= 2.0;
            const double enc_ref = nd * (t1 + t3);
            const double dec_ref = nd * (t2 + 0.5 * ld * t4);
            const double exh_ref = two_pow_k * nd * (t2 + l_pow_n * t4);

            const auto emit = [&](const char* name, double observed, double analytic) {
                auto rec = make_record(name, seed, observed, analytic);
                rec.k = static_cast<long long>(k);
                rec.n = static_cast<long long>(n);
                rec.l = static_cast<long long>(l);
                records.push_back(rec);
            };
            emit("complexity-encryption", est.encryption, enc_ref);
            emit("complexity-decryption", est.decryption, dec_ref);
            emit("complexity-exhaustive", est.exhaustive, exh_ref);
        }
    }
    return records;
}

std::vector<ExperimentRecord> run_encrypt_demo(std::size_t k, std::size_t n, long long trials,
                                               std::uint64_t seed) {
    Rng rng = Rng(seed).derive("encrypt-demo");
    long long good = 0;
    for (long long t = 0; t < trials; ++t) {
        Rng trial = rng.derive(static_cast<std::uint64_t>(t));
        const Key key{trial.next_bits(k)};
        const Bits message = trial.next_bits(n);
        const auto blocks = encrypt_message(message, key, trial);
        if (decrypt_message(blocks, key, trial) == message) ++good;
    }
    auto rec = make_record("encrypt-demo-roundtrip", seed,
                           static_cast<double>(good) / static_cast<double>(trials), 1.0);
    rec.k = static_cast<long long>(k);
    rec.n = static_cast<long long>(n);
    rec.trials = trials;
    return {rec};
}

}  // namespace qpenc
