// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <map>

#include "qpenc/densities.hpp"
#include "qpenc/errors.hpp"
#include "qpenc/scheme.hpp"

using namespace qpenc;

namespace {

const double kInvSqrt2 = 0.70710678118654752440;

bool close(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol = 1e-12) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("scheme");

TEST_CASE("rng reproduces streams and derives independent ones") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng base(42);
    Rng c = base.derive("x");
    Rng d = base.derive("y");
    CHECK(c.next_u64() != d.next_u64());
    CHECK(base.derive(1).next_u64() == base.derive(1).next_u64());
}

TEST_CASE("single-bit parity classes are single strings") {
    Rng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        CHECK(sample_parity_string(0, 1, rng).bits() == Bits{0});
        CHECK(sample_parity_string(1, 1, rng).bits() == Bits{1});
    }
    CHECK_THROWS_AS(sample_parity_string(0, 0, rng), std::invalid_argument);
}

TEST_CASE("parity sampling is uniform over the class") {
    // Omega_0^3 = {000, 011, 101, 110}
    Rng rng(7);
    const int trials = 100000;
    std::map<std::string, int> counts;
    for (int t = 0; t < trials; ++t) {
        const ParityString r = sample_parity_string(0, 3, rng);
        CHECK(parity(r.bits()) == 0);
        counts[to_string(r.bits())] += 1;
    }
    CHECK(counts.size() == 4);
    const double sigma = std::sqrt(0.25 * 0.75 * trials);
    for (const auto& [label, count] : counts)
        CHECK(std::abs(count - trials / 4.0) <= 3.0 * sigma);
}

TEST_CASE("encode_bit produces the stated product states") {
    const ProductState zero = encode_bit(0, Key{{0}}, ParityString({0}, 0));
    CHECK(close(zero.state_vector(), {1.0, 0.0}));

    const ProductState minus = encode_bit(1, Key{{1}}, ParityString({1}, 1));
    CHECK(close(minus.state_vector(), {kInvSqrt2, -kInvSqrt2}));

    const ProductState pair = encode_bit(1, Key{{0, 1}}, ParityString({1, 0}, 1));
    CHECK(close(pair.state_vector(), {0.0, 0.0, kInvSqrt2, kInvSqrt2}));
}

TEST_CASE("encode_bit rejects inconsistent inputs") {
    CHECK_THROWS_AS(encode_bit(1, Key{{0}}, ParityString({0}, 0)), InvariantError);
    CHECK_THROWS_AS(encode_bit(0, Key{{0, 1}}, ParityString({0}, 0)), DimensionMismatchError);
    CHECK_THROWS_AS(ParityString({1, 0}, 0), InvariantError);
}

TEST_CASE("matched-basis decryption is exact for every key and parity string") {
    Rng unused(0);
    for (std::size_t k = 1; k <= 4; ++k) {
        for (const auto& s : all_bit_strings(k)) {
            const Key key{s};
            for (int m : {0, 1}) {
                for (const auto& rbits : parity_class(m, k)) {
                    const ProductState state = encode_bit(m, key, ParityString(rbits, m));
                    CHECK(decrypt_bit(state, key, unused) == m);
                }
            }
        }
    }
}

TEST_CASE("wrong-basis measurement of a single qubit is a fair coin") {
    Rng rng(9);
    const ProductState state = encode_bit(0, Key{{0}}, ParityString({0}, 0));
    const Key wrong{{1}};
    const int trials = 100000;
    int ones = 0;
    for (int t = 0; t < trials; ++t) ones += decrypt_bit(state, wrong, rng);
    const double sigma = std::sqrt(0.25 * trials);
    CHECK(std::abs(ones - trials / 2.0) <= 3.0 * sigma);
}

TEST_CASE("ciphertext states are pure") {
    Rng rng(10);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t k = 1 + rng.next_below(4);
        const Key key{rng.next_bits(k)};
        const int m = rng.next_bit();
        const ProductState state = encode_bit(m, key, sample_parity_string(m, k, rng));
        const auto spectrum = hermitian_eigenvalues(state.density().matrix());
        CHECK(spectrum.front() == doctest::Approx(1.0).epsilon(1e-10));
        for (std::size_t i = 1; i < spectrum.size(); ++i)
            CHECK(std::abs(spectrum[i]) < 1e-10);
    }
}

TEST_CASE("single-block encryption reduces to encode after one parity draw") {
    const Key key{{1, 0, 1}};
    Rng rng_a(55), rng_b(55);
    const auto blocks = encrypt_message({1}, key, rng_a);
    REQUIRE(blocks.size() == 1);
    const ProductState direct = encode_bit(1, key, sample_parity_string(1, 3, rng_b));
    CHECK(close(blocks.front().state_vector(), direct.state_vector()));
}

TEST_CASE("message round trip recovers the plaintext") {
    Rng rng(77);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t k = 1 + rng.next_below(6);
        const std::size_t n = 1 + rng.next_below(8);
        const Key key{rng.next_bits(k)};
        const Bits message = rng.next_bits(n);
        const auto blocks = encrypt_message(message, key, rng);
        REQUIRE(blocks.size() == n);
        std::size_t qubits = 0;
        for (const auto& b : blocks) qubits += b.size();
        CHECK(qubits == n * k);
        CHECK(decrypt_message(blocks, key, rng) == message);
    }
}

TEST_CASE("qpc encrypts through H^s1 X^s2 and inverts exactly") {
    CHECK(close(qubit_state(qpc_encrypt(0, 0, 0)), {1.0, 0.0}));
    // H X |0> = H |1> = |->
    CHECK(close(qubit_state(qpc_encrypt(0, 1, 1)), {kInvSqrt2, -kInvSqrt2}));
    for (int b : {0, 1})
        for (int s1 : {0, 1})
            for (int s2 : {0, 1}) CHECK(qpc_decrypt(qpc_encrypt(b, s1, s2), s1, s2) == b);
    CHECK_THROWS_AS(qpc_decrypt(qpc_encrypt(0, 0, 0), 1, 0), InvariantError);
}

TEST_SUITE_END();
