// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qpenc/bits.hpp"
#include "qpenc/linalg.hpp"
#include "qpenc/rng.hpp"

namespace qpenc {

// Private key: the basis-choice string s_1..s_k.
struct Key {
    Bits bits;
    std::size_t k() const { return bits.size(); }
};

// A k-bit string r with r_1 xor ... xor r_k = parity. Membership in the
// parity class is checked at construction.
class ParityString {
public:
    ParityString(Bits bits, int parity_bit);

    const Bits& bits() const { return bits_; }
    int parity_bit() const { return parity_; }
    std::size_t size() const { return bits_.size(); }

private:
    Bits bits_;
    int parity_;
};

// One conjugate-coded qubit: |bit> in the computational basis when basis=0,
// |bit> in the Hadamard basis when basis=1.
struct EncodedQubit {
    int bit;
    int basis;
};

// The four coded states: |0>_0=|0>, |1>_0=|1>, |0>_1=|+>, |1>_1=|->.
std::vector<cplx> qubit_state(const EncodedQubit& q);
ComplexMatrix qubit_projector(const EncodedQubit& q);

// Tensor product of conjugate-coded qubits, stored symbolically; vectors and
// density operators are expanded on demand (and only up to the dimension cap).
class ProductState {
public:
    explicit ProductState(std::vector<EncodedQubit> qubits);

    const std::vector<EncodedQubit>& qubits() const { return qubits_; }
    std::size_t size() const { return qubits_.size(); }

    std::vector<cplx> state_vector() const;
    DensityOperator density() const;

private:
    std::vector<EncodedQubit> qubits_;
};

// Uniform draw from the parity class of b (the 2^{k-1} strings of parity b).
ParityString sample_parity_string(int b, std::size_t k, Rng& rng);

// Encryption of one plaintext bit m: qubit j carries (r_j, s_j). Requires
// r's parity to equal m and |r| = |s|.
ProductState encode_bit(int m, const Key& key, const ParityString& r);

// Measure one qubit in the given basis. Matching basis recovers the coded
// bit with probability 1; a mismatched basis yields a fair coin.
int measure_qubit(const EncodedQubit& q, int basis, Rng& rng);

// Key-basis measurement of every qubit, then the parity of the outcomes.
int decrypt_bit(const ProductState& state, const Key& key, Rng& rng);

// Bitwise encryption of an n-bit message; block i carries m_i with a fresh
// parity string.
std::vector<ProductState> encrypt_message(const Bits& m, const Key& key, Rng& rng);
Bits decrypt_message(const std::vector<ProductState>& blocks, const Key& key, Rng& rng);

// Deterministic quantum-private-channel scheme: |b> -> H^{s1} X^{s2} |b>.
// A key of length k encrypts k/2 bits per use (one key pair per bit).
EncodedQubit qpc_encrypt(int b, int s1, int s2);
// Exact inverse; requires the matching key pair (measurement in basis s1).
int qpc_decrypt(const EncodedQubit& state, int s1, int s2);

}  // namespace qpenc
