// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qpenc/bits.hpp"
#include "qpenc/rng.hpp"
#include "qpenc/scheme.hpp"

namespace qpenc {

// Index into the transform family H_1..H_l.
struct TransformIndex {
    std::size_t lambda;  // 1-based
    std::size_t l;
};

// The transform family: H_1 is the identity; H_lambda for lambda > 1 XORs a
// lambda-derived mask and rotates left by a lambda-derived shift. Every
// member is a bijection on {0,1}^k with a cheap inverse.
Bits h_transform(const TransformIndex& idx, const Bits& block);
Bits h_inverse(const TransformIndex& idx, const Bits& block);

// CRC-8 (poly 0x07) over a bit string; the configurable redundancy that lets
// the receiver pick one decryption candidate.
std::uint8_t crc8(const Bits& payload);
Bits append_crc8(const Bits& payload);
bool check_crc8(const Bits& block);

using RedundancyPredicate = std::function<bool(const Bits&)>;

// Wrapped block cipher. Block length k covers a (k-8)-bit payload plus its
// CRC-8; the base cipher is an XOR with a key-derived pad. Messages must be
// a multiple of the payload width.
struct ClassicalScheme {
    Key key;            // reuses the bit-string key type
    std::size_t l = 1;  // family size

    std::size_t payload_bits() const { return key.k() - 8; }
};

std::vector<Bits> classical_encrypt(const Bits& message, const ClassicalScheme& scheme, Rng& rng);
Bits classical_decrypt(const std::vector<Bits>& blocks, const ClassicalScheme& scheme,
                       const RedundancyPredicate& predicate = check_crc8);

// Symbolic costs of the base cipher and the transform family.
struct ComplexityProfile {
    double t1 = 0.0;  // base encryption
    double t2 = 0.0;  // base decryption
    double t3 = 0.0;  // forward transform
    double t4 = 0.0;  // inverse transform
    std::size_t n = 1;
    std::size_t k = 1;
    std::size_t l = 1;
};

struct ComplexityEstimates {
    double encryption;        // n * (t1 + t3)
    double decryption;        // n * (t2 + l*t4/2), expected candidate count
    double decryption_worst;  // n * (t2 + l*t4), every candidate tried
    double exhaustive;        // 2^k * n * (t2 + l^n * t4)
    bool overflow;            // any closed form left the finite double range
};

ComplexityEstimates complexity_estimates(const ComplexityProfile& profile);

}  // namespace qpenc
