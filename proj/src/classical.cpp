// SPDX-License-Identifier: Apache-2.0
#include "qpenc/classical.hpp"

#include <cmath>
#include <stdexcept>

#include "qpenc/errors.hpp"

namespace qpenc {

namespace {

void check_index(const TransformIndex& idx) {
    if (idx.lambda < 1 || idx.lambda > idx.l)
        throw std::invalid_argument("transform index out of range 1..l");
}

// Mask and shift for H_lambda from a fixed seeded expansion of lambda.
struct TransformParams {
    Bits mask;
    std::size_t shift;
};

TransformParams transform_params(std::size_t lambda, std::size_t k) {
    if (lambda == 1) return TransformParams{Bits(k, 0), 0};
    Rng rng = Rng(0x68bba7d2ull).derive(static_cast<std::uint64_t>(lambda));
    TransformParams p{rng.next_bits(k), 0};
    p.shift = static_cast<std::size_t>(rng.next_below(k));
    return p;
}

Bits rotate_left(const Bits& block, std::size_t shift) {
    const std::size_t k = block.size();
    Bits out(k);
    for (std::size_t j = 0; j < k; ++j) out[j] = block[(j + shift) % k];
    return out;
}

Bits rotate_right(const Bits& block, std::size_t shift) {
    const std::size_t k = block.size();
    Bits out(k);
    for (std::size_t j = 0; j < k; ++j) out[(j + shift) % k] = block[j];
    return out;
}

Bits xor_bits(Bits a, const Bits& b) {
    for (std::size_t j = 0; j < a.size(); ++j) a[j] ^= b[j];
    return a;
}

// Base cipher pad for one block position, expanded from the key bits.
Bits key_pad(const Key& key, std::size_t block_index) {
    Rng rng = Rng(index_from_bits(key.bits) ^ 0x9d8f3c1bull).derive(block_index);
    return rng.next_bits(key.k());
}

}  // namespace

Bits h_transform(const TransformIndex& idx, const Bits& block) {
    check_index(idx);
    if (block.empty()) throw std::invalid_argument("h_transform: empty block");
    const TransformParams p = transform_params(idx.lambda, block.size());
    return rotate_left(xor_bits(block, p.mask), p.shift);
}

Bits h_inverse(const TransformIndex& idx, const Bits& block) {
    check_index(idx);
    if (block.empty()) throw std::invalid_argument("h_inverse: empty block");
    const TransformParams p = transform_params(idx.lambda, block.size());
    return xor_bits(rotate_right(block, p.shift), p.mask);
}

std::uint8_t crc8(const Bits& payload) {
    std::uint8_t crc = 0;
    for (auto bit : payload) {
        const std::uint8_t top = static_cast<std::uint8_t>((crc >> 7) ^ (bit & 1));
        crc = static_cast<std::uint8_t>(crc << 1);
        if (top) crc ^= 0x07;
    }
    return crc;
}

Bits append_crc8(const Bits& payload) {
    Bits out = payload;
    const std::uint8_t c = crc8(payload);
    for (int j = 7; j >= 0; --j) out.push_back(static_cast<std::uint8_t>((c >> j) & 1));
    return out;
}

bool check_crc8(const Bits& block) {
    if (block.size() < 8) return false;
    Bits payload(block.begin(), block.end() - 8);
    std::uint8_t stored = 0;
    for (std::size_t j = block.size() - 8; j < block.size(); ++j)
        stored = static_cast<std::uint8_t>((stored << 1) | (block[j] & 1));
    return crc8(payload) == stored;
}

std::vector<Bits> classical_encrypt(const Bits& message, const ClassicalScheme& scheme, Rng& rng) {
    if (scheme.key.k() <= 8)
        throw std::invalid_argument("classical_encrypt: key must be longer than the CRC");
    if (scheme.l == 0) throw std::invalid_argument("classical_encrypt: family size must be >= 1");
    const std::size_t payload = scheme.payload_bits();
    if (message.empty() || message.size() % payload != 0)
        throw std::invalid_argument("classical_encrypt: message length must be a multiple of " +
                                    std::to_string(payload));
    std::vector<Bits> blocks;
    blocks.reserve(message.size() / payload);
    for (std::size_t offset = 0; offset < message.size(); offset += payload) {
        Bits chunk(message.begin() + offset, message.begin() + offset + payload);
        const std::size_t lambda = 1 + static_cast<std::size_t>(rng.next_below(scheme.l));
        Bits transformed = h_transform(TransformIndex{lambda, scheme.l}, append_crc8(chunk));
        blocks.push_back(xor_bits(std::move(transformed), key_pad(scheme.key, blocks.size())));
    }
    return blocks;
}

Bits classical_decrypt(const std::vector<Bits>& blocks, const ClassicalScheme& scheme,
                       const RedundancyPredicate& predicate) {
    Bits out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].size() != scheme.key.k())
            throw DimensionMismatchError("classical_decrypt: block length mismatch");
        const Bits unpadded = xor_bits(blocks[i], key_pad(scheme.key, i));
        std::size_t hits = 0;
        Bits selected;
        for (std::size_t lambda = 1; lambda <= scheme.l; ++lambda) {
            Bits candidate = h_inverse(TransformIndex{lambda, scheme.l}, unpadded);
            if (predicate(candidate)) {
                ++hits;
                if (hits == 1) selected = std::move(candidate);
            }
        }
        if (hits == 0)
            throw InvariantError("classical_decrypt: no candidate satisfies the redundancy");
        if (hits > 1)
            throw AmbiguityError("classical_decrypt: " + std::to_string(hits) +
                                 " candidates satisfy the redundancy");
        out.insert(out.end(), selected.begin(), selected.end() - 8);
    }
    return out;
}

ComplexityEstimates complexity_estimates(const ComplexityProfile& profile) {
    if (profile.t1 < 0 || profile.t2 < 0 || profile.t3 < 0 || profile.t4 < 0)
        throw std::invalid_argument("complexity_estimates: costs must be nonnegative");
    const double n = static_cast<double>(profile.n);
    const double l = static_cast<double>(profile.l);
    ComplexityEstimates est{};
    est.encryption = n * (profile.t1 + profile.t3);
    est.decryption = n * (profile.t2 + 0.5 * l * profile.t4);
    est.decryption_worst = n * (profile.t2 + l * profile.t4);
    est.exhaustive = std::pow(2.0, static_cast<double>(profile.k)) * n *
                     (profile.t2 + std::pow(l, n) * profile.t4);
    est.overflow = !(std::isfinite(est.encryption) && std::isfinite(est.decryption) &&
                     std::isfinite(est.decryption_worst) && std::isfinite(est.exhaustive));
    return est;
}

}  // namespace qpenc
