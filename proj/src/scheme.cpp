// SPDX-License-Identifier: Apache-2.0
#include "qpenc/scheme.hpp"

#include <cmath>
#include <stdexcept>

#include "qpenc/errors.hpp"

namespace qpenc {

namespace {

const double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

ParityString::ParityString(Bits bits, int parity_bit) : bits_(std::move(bits)), parity_(parity_bit & 1) {
    if (bits_.empty()) throw std::invalid_argument("ParityString: empty string");
    if (parity(bits_) != parity_)
        throw InvariantError("ParityString: bits do not carry the claimed parity");
}

std::vector<cplx> qubit_state(const EncodedQubit& q) {
    if ((q.bit & ~1) || (q.basis & ~1)) throw std::invalid_argument("qubit_state: bits must be 0/1");
    if (q.basis == 0)
        return q.bit == 0 ? std::vector<cplx>{1.0, 0.0} : std::vector<cplx>{0.0, 1.0};
    return q.bit == 0 ? std::vector<cplx>{kInvSqrt2, kInvSqrt2}
                      : std::vector<cplx>{kInvSqrt2, -kInvSqrt2};
}

ComplexMatrix qubit_projector(const EncodedQubit& q) {
    if ((q.bit & ~1) || (q.basis & ~1))
        throw std::invalid_argument("qubit_projector: bits must be 0/1");
    // Exact entries: (1/sqrt2)^2 in floating point is off by one ulp.
    ComplexMatrix p(2);
    if (q.basis == 0) {
        p.at(q.bit, q.bit) = 1.0;
    } else {
        const double off = q.bit == 0 ? 0.5 : -0.5;
        p.at(0, 0) = 0.5;
        p.at(1, 1) = 0.5;
        p.at(0, 1) = off;
        p.at(1, 0) = off;
    }
    return p;
}

ProductState::ProductState(std::vector<EncodedQubit> qubits) : qubits_(std::move(qubits)) {
    if (qubits_.empty()) throw std::invalid_argument("ProductState: no qubits");
    for (const auto& q : qubits_)
        if ((q.bit & ~1) || (q.basis & ~1))
            throw std::invalid_argument("ProductState: qubit fields must be 0/1");
}

std::vector<cplx> ProductState::state_vector() const {
    std::vector<cplx> v = qubit_state(qubits_.front());
    for (std::size_t j = 1; j < qubits_.size(); ++j) v = kron(v, qubit_state(qubits_[j]));
    return v;
}

DensityOperator ProductState::density() const {
    return DensityOperator(ComplexMatrix::outer(state_vector()));
}

ParityString sample_parity_string(int b, std::size_t k, Rng& rng) {
    if (k == 0) throw std::invalid_argument("sample_parity_string: k must be positive");
    Bits bits = rng.next_bits(k - 1);
    int acc = parity(bits);
    bits.push_back(static_cast<std::uint8_t>(acc ^ (b & 1)));
    return ParityString(std::move(bits), b);
}

ProductState encode_bit(int m, const Key& key, const ParityString& r) {
    if (r.parity_bit() != (m & 1))
        throw InvariantError("encode_bit: parity string does not encode the plaintext bit");
    if (r.size() != key.k())
        throw DimensionMismatchError("encode_bit: key and parity string lengths differ");
    std::vector<EncodedQubit> qubits;
    qubits.reserve(key.k());
    for (std::size_t j = 0; j < key.k(); ++j)
        qubits.push_back(EncodedQubit{r.bits()[j], key.bits[j]});
    return ProductState(std::move(qubits));
}

int measure_qubit(const EncodedQubit& q, int basis, Rng& rng) {
    // Matching basis: eigenstate, deterministic. Mismatched BB84 bases are
    // mutually unbiased, |<a|b>|^2 = 1/2, so the outcome is a fair coin.
    if (q.basis == (basis & 1)) return q.bit;
    return rng.next_bit();
}

int decrypt_bit(const ProductState& state, const Key& key, Rng& rng) {
    if (state.size() != key.k())
        throw DimensionMismatchError("decrypt_bit: key and state lengths differ");
    int acc = 0;
    for (std::size_t j = 0; j < key.k(); ++j)
        acc ^= measure_qubit(state.qubits()[j], key.bits[j], rng);
    return acc;
}

std::vector<ProductState> encrypt_message(const Bits& m, const Key& key, Rng& rng) {
    if (m.empty()) throw std::invalid_argument("encrypt_message: empty message");
    std::vector<ProductState> blocks;
    blocks.reserve(m.size());
    for (auto bit : m) {
        ParityString r = sample_parity_string(bit, key.k(), rng);
        blocks.push_back(encode_bit(bit, key, r));
    }
    return blocks;
}

Bits decrypt_message(const std::vector<ProductState>& blocks, const Key& key, Rng& rng) {
    Bits out;
    out.reserve(blocks.size());
    for (const auto& block : blocks)
        out.push_back(static_cast<std::uint8_t>(decrypt_bit(block, key, rng)));
    return out;
}

EncodedQubit qpc_encrypt(int b, int s1, int s2) {
    if ((b & ~1) || (s1 & ~1) || (s2 & ~1))
        throw std::invalid_argument("qpc_encrypt: bits must be 0/1");
    // X^{s2}|b> = |b xor s2>, then H^{s1} moves it to the Hadamard basis.
    return EncodedQubit{b ^ s2, s1};
}

int qpc_decrypt(const EncodedQubit& state, int s1, int s2) {
    if ((s1 & ~1) || (s2 & ~1)) throw std::invalid_argument("qpc_decrypt: bits must be 0/1");
    if (state.basis != s1)
        throw InvariantError("qpc_decrypt: state was not produced with this key pair");
    return state.bit ^ s2;
}

}  // namespace qpenc
