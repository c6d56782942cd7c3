// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qpenc/bits.hpp"
#include "qpenc/rng.hpp"

namespace qpenc {

// Maximal-length Fibonacci LFSR standing in for a pseudo-random plaintext
// source. Register length L in 2..16; the seed picks a nonzero start state.
class PlaintextSource {
public:
    PlaintextSource(int register_length, std::uint64_t seed);

    int register_length() const { return length_; }
    int next_bit();

private:
    int length_;
    std::uint32_t taps_;
    std::uint32_t state_;
};

Bits prg_stream(PlaintextSource& source, std::size_t length);

// Length of the shortest LFSR generating the sequence (Berlekamp-Massey
// synthesis over GF(2)).
std::size_t linear_complexity(const Bits& bits);

// Detector: a string of length >= N is called pseudo-random when the linear
// complexity of its first N bits is at most L. Requires N > 2L so the
// synthesis is conclusive for the sources above.
struct DetectorConfig {
    std::size_t N;
    std::size_t L;
};

bool is_pseudorandom(const Bits& bits, const DetectorConfig& cfg);

struct AttackReport {
    Bits recovered_key;
    std::size_t qubits_consumed = 0;
    std::size_t candidates_tested = 0;
    bool success = false;
    bool ambiguous = false;  // two or more candidates passed the detector
};

// Exhaustive key recovery against the probabilistic scheme: one group of N
// single-bit ciphertexts (k qubits each) per candidate key, measured under
// that candidate only (measurement is destructive, so groups are disjoint).
// Needs k * 2^k * N qubits; supply_qubits below that is a budget error.
AttackReport attack_probabilistic(std::size_t k, const DetectorConfig& cfg, Rng& rng,
                                  std::size_t supply_qubits);
AttackReport attack_probabilistic(std::size_t k, const DetectorConfig& cfg, Rng& rng);

// Key recovery against the deterministic quantum-private-channel scheme:
// each of the k/2 key pairs is tested independently over its 4 candidates,
// consuming 4N qubits per pair (2kN total). Requires even k.
AttackReport attack_deterministic(std::size_t k, const DetectorConfig& cfg, Rng& rng,
                                  std::size_t supply_qubits);
AttackReport attack_deterministic(std::size_t k, const DetectorConfig& cfg, Rng& rng);

struct UnicityRow {
    std::size_t k;
    std::size_t qubits_probabilistic;
    std::size_t qubits_deterministic;
    double ratio;
    bool probabilistic_success;
    bool deterministic_success;
};

// Ciphertext consumption of both attacks side by side; the ratio is
// 2^k / 2 when both run on their exact budgets.
std::vector<UnicityRow> compare_unicity(const std::vector<std::size_t>& k_values,
                                        const DetectorConfig& cfg, Rng& rng);

}  // namespace qpenc
