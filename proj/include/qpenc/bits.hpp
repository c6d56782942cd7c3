// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpenc {

// Bit strings are kept as byte-per-bit vectors; every entry is 0 or 1.
using Bits = std::vector<std::uint8_t>;

inline int parity(const Bits& bits) {
    int acc = 0;
    for (auto b : bits) acc ^= (b & 1);
    return acc;
}

inline std::size_t hamming_weight(const Bits& bits) {
    std::size_t w = 0;
    for (auto b : bits) w += (b & 1);
    return w;
}

inline std::string to_string(const Bits& bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

inline Bits bits_from_string(const std::string& s) {
    Bits out;
    out.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("bits_from_string: non-binary character");
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

// Big-endian unpack: bit 0 of the string is the most significant bit of v.
inline Bits bits_from_index(std::uint64_t v, std::size_t width) {
    Bits out(width, 0);
    for (std::size_t j = 0; j < width; ++j)
        out[j] = static_cast<std::uint8_t>((v >> (width - 1 - j)) & 1u);
    return out;
}

inline std::uint64_t index_from_bits(const Bits& bits) {
    std::uint64_t v = 0;
    for (auto b : bits) v = (v << 1) | (b & 1u);
    return v;
}

// All k-bit strings in lexicographic order.
inline std::vector<Bits> all_bit_strings(std::size_t k) {
    std::vector<Bits> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v)
        out.push_back(bits_from_index(v, k));
    return out;
}

}  // namespace qpenc
