// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <set>

#include "qpenc/classical.hpp"
#include "qpenc/errors.hpp"

using namespace qpenc;

TEST_SUITE_BEGIN("classical");

TEST_CASE("the first family member is the identity") {
    Rng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const Bits block = rng.next_bits(16);
        CHECK(h_transform(TransformIndex{1, 4}, block) == block);
    }
}

TEST_CASE("every family member inverts exactly") {
    Rng rng(2);
    const std::size_t l = 8;
    for (int trial = 0; trial < 1000; ++trial) {
        const Bits block = rng.next_bits(16);
        const std::size_t lambda = 1 + rng.next_below(l);
        const TransformIndex idx{lambda, l};
        CHECK(h_inverse(idx, h_transform(idx, block)) == block);
    }
}

TEST_CASE("distinct members usually produce distinct images") {
    Rng rng(3);
    const std::size_t l = 8;
    int distinct = 0;
    const int trials = 200;
    for (int trial = 0; trial < trials; ++trial) {
        const Bits block = rng.next_bits(16);
        std::set<std::string> images;
        for (std::size_t lambda = 1; lambda <= l; ++lambda)
            images.insert(to_string(h_transform(TransformIndex{lambda, l}, block)));
        if (images.size() == l) ++distinct;
    }
    CHECK(distinct >= trials * 9 / 10);
}

TEST_CASE("transform index is validated") {
    CHECK_THROWS_AS(h_transform(TransformIndex{0, 4}, Bits(8, 0)), std::invalid_argument);
    CHECK_THROWS_AS(h_transform(TransformIndex{5, 4}, Bits(8, 0)), std::invalid_argument);
}

TEST_CASE("crc8 catches tampering and round-trips") {
    Rng rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const Bits payload = rng.next_bits(8);
        Bits block = append_crc8(payload);
        CHECK(check_crc8(block));
        block[rng.next_below(block.size())] ^= 1;
        CHECK_FALSE(check_crc8(block));
    }
}

TEST_CASE("family of one degenerates to the base cipher") {
    Rng rng(5);
    const ClassicalScheme scheme{Key{rng.next_bits(16)}, 1};
    const Bits message = rng.next_bits(32);
    CHECK(classical_decrypt(classical_encrypt(message, scheme, rng), scheme) == message);
}

TEST_CASE("wrapped cipher round-trips except for rare predicate collisions") {
    Rng rng(6);
    const ClassicalScheme scheme{Key{rng.next_bits(16)}, 4};
    const int trials = 1000;
    int recovered = 0;
    int ambiguous = 0;
    for (int t = 0; t < trials; ++t) {
        const Bits message = rng.next_bits(8);
        const auto blocks = classical_encrypt(message, scheme, rng);
        try {
            if (classical_decrypt(blocks, scheme) == message) ++recovered;
        } catch (const AmbiguityError&) {
            ++ambiguous;
        }
    }
    CHECK(recovered + ambiguous == trials);
    // Collision chance per wrong candidate is about 2^-8.
    CHECK(static_cast<double>(recovered) / trials >= 1.0 - 4.0 / 256.0);
}

TEST_CASE("tampered ciphertext surfaces as a predicate failure") {
    Rng rng(7);
    const ClassicalScheme scheme{Key{rng.next_bits(16)}, 4};
    auto blocks = classical_encrypt(rng.next_bits(8), scheme, rng);
    blocks[0][3] ^= 1;
    CHECK_THROWS_AS(classical_decrypt(blocks, scheme), std::runtime_error);
}

TEST_CASE("complexity formulas on the worked examples") {
    const ComplexityEstimates one = complexity_estimates({1, 1, 1, 1, 1, 4, 1});
    CHECK(one.encryption == 2.0);
    CHECK(one.decryption == 1.5);
    CHECK(one.exhaustive == 16.0 * 2.0);

    const ComplexityEstimates two = complexity_estimates({1, 1, 1, 1, 2, 4, 2});
    CHECK(two.encryption == 4.0);
    CHECK(two.decryption == 4.0);
    CHECK(two.exhaustive == 160.0);

    const ComplexityEstimates zero = complexity_estimates({0, 0, 0, 0, 3, 5, 2});
    CHECK(zero.encryption == 0.0);
    CHECK(zero.decryption == 0.0);
    CHECK(zero.exhaustive == 0.0);
    CHECK_FALSE(zero.overflow);
}

TEST_CASE("worst-case decryption tries every candidate") {
    const ComplexityEstimates est = complexity_estimates({1, 1, 1, 1, 2, 4, 6});
    CHECK(est.decryption_worst == 2.0 * (1.0 + 6.0));
    CHECK(est.decryption == 2.0 * (1.0 + 3.0));
}

TEST_CASE("exhaustive attack cost grows like l^n") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const double current =
            complexity_estimates({1, 0, 1, 1, n, 8, 3}).exhaustive;
        const double next =
            complexity_estimates({1, 0, 1, 1, n + 1, 8, 3}).exhaustive;
        CHECK(next / current >= 3.0);
    }
}

TEST_CASE("overflow is flagged, not fatal") {
    const ComplexityEstimates est = complexity_estimates({1, 1, 1, 1, 10000, 1000, 100});
    CHECK(est.overflow);
}

TEST_SUITE_END();
