// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "qpenc/errors.hpp"
#include "qpenc/scheme.hpp"
#include "qpenc/unicity.hpp"

using namespace qpenc;

namespace {

// Brute-force linear complexity: smallest L such that some GF(2) recurrence
// of order L generates the whole sequence. Exponential, test-only.
std::size_t linear_complexity_oracle(const Bits& bits) {
    const std::size_t n = bits.size();
    bool all_zero = true;
    for (auto b : bits) all_zero = all_zero && b == 0;
    if (all_zero) return 0;
    for (std::size_t L = 1; L <= n; ++L) {
        if (L >= n) return n;  // any sequence is generated by an order-n register
        for (std::uint64_t coeffs = 0; coeffs < (std::uint64_t{1} << L); ++coeffs) {
            bool ok = true;
            for (std::size_t i = L; i < n && ok; ++i) {
                int predicted = 0;
                for (std::size_t j = 0; j < L; ++j)
                    if ((coeffs >> j) & 1u) predicted ^= bits[i - 1 - j];
                ok = predicted == (bits[i] & 1);
            }
            if (ok) return L;
        }
    }
    return n;
}

}  // namespace

TEST_SUITE_BEGIN("unicity");

TEST_CASE("the source is reproducible") {
    PlaintextSource a(8, 1234), b(8, 1234);
    CHECK(prg_stream(a, 256) == prg_stream(b, 256));
}

TEST_CASE("maximal-length registers have period 2^L - 1") {
    for (int L : {3, 4, 8, 10}) {
        PlaintextSource source(L, 1);
        const std::size_t period = (std::size_t{1} << L) - 1;
        const Bits first = prg_stream(source, period);
        const Bits second = prg_stream(source, period);
        CHECK(first == second);
        // No smaller period: the stream must differ from its shifts.
        for (std::size_t shift : {std::size_t{1}, period / 2}) {
            bool same = true;
            for (std::size_t i = 0; i + shift < period && same; ++i)
                same = first[i] == first[(i + shift) % period];
            CHECK_FALSE(same);
        }
    }
}

TEST_CASE("berlekamp-massey synthesis matches the brute-force oracle") {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const Bits bits = rng.next_bits(12);
        CHECK(linear_complexity(bits) == linear_complexity_oracle(bits));
    }
    CHECK(linear_complexity(Bits{}) == 0);
    CHECK(linear_complexity(Bits(16, 0)) == 0);
    CHECK(linear_complexity(bits_from_string("0001")) == 4);
    CHECK(linear_complexity(bits_from_string("1111")) == 1);
}

TEST_CASE("the stream's linear complexity equals the register length") {
    PlaintextSource source(8, 99);
    const Bits stream = prg_stream(source, 64);
    CHECK(linear_complexity(stream) == 8);
}

TEST_CASE("the detector accepts source output and rejects coin flips") {
    const DetectorConfig cfg{64, 8};
    PlaintextSource source(8, 5);
    CHECK(is_pseudorandom(prg_stream(source, 64), cfg));
    CHECK(is_pseudorandom(Bits(64, 0), cfg));  // degenerate all-zero case

    Rng rng(9);
    int false_positives = 0;
    for (int t = 0; t < 1000; ++t)
        if (is_pseudorandom(rng.next_bits(64), cfg)) ++false_positives;
    CHECK(false_positives == 0);

    CHECK_THROWS_AS(is_pseudorandom(Bits(32, 0), cfg), std::invalid_argument);
    CHECK_THROWS_AS(is_pseudorandom(Bits(64, 0), DetectorConfig{16, 8}), std::invalid_argument);
}

TEST_CASE("probabilistic attack recovers the key on its exact budget") {
    const DetectorConfig cfg{64, 8};
    Rng rng(10);
    const AttackReport report = attack_probabilistic(4, cfg, rng);
    CHECK(report.success);
    CHECK_FALSE(report.ambiguous);
    CHECK(report.qubits_consumed == 4 * 16 * 64);
    CHECK(report.candidates_tested == 16);
    CHECK(report.recovered_key.size() == 4);
}

TEST_CASE("probabilistic attack refuses an undersized supply") {
    const DetectorConfig cfg{64, 8};
    Rng rng(11);
    // Enough for only 2 of the 16 groups.
    CHECK_THROWS_AS(attack_probabilistic(4, cfg, rng, 2 * 4 * 64), BudgetError);
}

TEST_CASE("wrong-key decryption streams are unbiased coin flips") {
    Rng rng(12);
    const Key true_key{{0, 0, 1, 1}};
    const Key wrong_key{{0, 1, 1, 1}};
    const std::size_t trials = 20000;
    std::size_t ones = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const int m = rng.next_bit();
        const ProductState block = encode_bit(m, true_key, sample_parity_string(m, 4, rng));
        ones += static_cast<std::size_t>(decrypt_bit(block, wrong_key, rng));
    }
    const double sigma = std::sqrt(0.25 * static_cast<double>(trials));
    CHECK(std::abs(static_cast<double>(ones) - trials / 2.0) <= 3.0 * sigma);
}

TEST_CASE("deterministic attack fixes the whole key pair by pair") {
    const DetectorConfig cfg{64, 8};
    Rng rng(13);
    const AttackReport report = attack_deterministic(4, cfg, rng);
    CHECK(report.success);
    CHECK(report.qubits_consumed == 2 * 4 * 64);
    CHECK(report.candidates_tested == 8);  // 4 candidates for each of 2 pairs

    Rng rng2(14);
    const AttackReport tiny = attack_deterministic(2, cfg, rng2);
    CHECK(tiny.success);
    CHECK(tiny.qubits_consumed == 4 * 64);  // one pair, 4N states
}

TEST_CASE("deterministic attack validates its inputs") {
    const DetectorConfig cfg{64, 8};
    Rng rng(15);
    CHECK_THROWS_AS(attack_deterministic(3, cfg, rng), std::invalid_argument);
    CHECK_THROWS_AS(attack_deterministic(4, cfg, rng, 100), BudgetError);
}

TEST_CASE("attack success is stable across seeded runs") {
    const DetectorConfig cfg{64, 8};
    Rng rng(16);
    for (std::size_t run = 0; run < 20; ++run) {
        Rng prob_rng = rng.derive("p").derive(run);
        Rng det_rng = rng.derive("d").derive(run);
        CHECK(attack_probabilistic(4, cfg, prob_rng).success);
        CHECK(attack_deterministic(4, cfg, det_rng).success);
    }
}

TEST_CASE("consumption ratio grows as 2^k / 2") {
    const DetectorConfig cfg{64, 8};
    Rng rng(17);
    const auto rows = compare_unicity({2, 4, 6}, cfg, rng);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].ratio == 2.0);
    CHECK(rows[1].ratio == 8.0);
    CHECK(rows[2].ratio == 32.0);
    CHECK(rows[0].ratio < rows[1].ratio);
    CHECK(rows[1].ratio < rows[2].ratio);
    for (const auto& row : rows) {
        CHECK(row.qubits_probabilistic == row.k * (std::size_t{1} << row.k) * cfg.N);
        CHECK(row.qubits_deterministic == 2 * row.k * cfg.N);
    }
}

TEST_SUITE_END();
