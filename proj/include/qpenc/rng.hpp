// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

#include "qpenc/bits.hpp"

namespace qpenc {

// Counter-based generator: output i is a splitmix64 finalizer applied to
// key + i*golden, so identical seeds reproduce identical streams and a
// derived generator never shares a stream with its parent. Derivation by
// label or index gives independent streams for parallel sub-experiments.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(finalize(seed ^ 0x9e3779b97f4a7c15ull)) {}

    std::uint64_t next_u64() {
        counter_ += 0x9e3779b97f4a7c15ull;
        return finalize(key_ + counter_);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    int next_bit() { return static_cast<int>(next_u64() >> 63); }

    // Uniform in [0, n) by rejection; n must be positive.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    // Standard normal via Box-Muller; two uniforms consumed per call.
    double next_gaussian() {
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    Bits next_bits(std::size_t k) {
        Bits out(k, 0);
        for (auto& b : out) b = static_cast<std::uint8_t>(next_bit());
        return out;
    }

    Rng derive(std::string_view label) const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (char c : label) {
            h ^= static_cast<std::uint8_t>(c);
            h *= 0x100000001b3ull;
        }
        return Rng(finalize(key_ ^ h));
    }

    Rng derive(std::uint64_t index) const {
        return Rng(finalize(key_ ^ (index * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull)));
    }

private:
    static std::uint64_t finalize(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace qpenc
