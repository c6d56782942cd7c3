// SPDX-License-Identifier: Apache-2.0
#include "qpenc/unicity.hpp"

#include <stdexcept>
#include <string>

#include "qpenc/errors.hpp"
#include "qpenc/scheme.hpp"

namespace qpenc {

namespace {

// Primitive feedback polynomials x^L + ... + 1, taps as masks over state
// bits 0..L-1: bit j is set when the polynomial carries x^j (clocking a
// right-shift register, the new top bit is the XOR of the tapped bits).
// Entry L-2 holds the taps for register length L.
constexpr std::uint32_t kMaximalTaps[] = {
    0b11,                // L=2:  x^2 + x + 1
    0b101,               // L=3:  x^3 + x^2 + 1
    0b1001,              // L=4:  x^4 + x^3 + 1
    0b1001,              // L=5:  x^5 + x^3 + 1
    0b100001,            // L=6:  x^6 + x^5 + 1
    0b1000001,           // L=7:  x^7 + x^6 + 1
    0b1110001,           // L=8:  x^8 + x^6 + x^5 + x^4 + 1
    0b100001,            // L=9:  x^9 + x^5 + 1
    0b10000001,          // L=10: x^10 + x^7 + 1
    0b1000000001,        // L=11: x^11 + x^9 + 1
    0b110000010001,      // L=12: x^12 + x^11 + x^10 + x^4 + 1
    0b1100100000001,     // L=13: x^13 + x^12 + x^11 + x^8 + 1
    0b11000000000101,    // L=14: x^14 + x^13 + x^12 + x^2 + 1
    0b100000000000001,   // L=15: x^15 + x^14 + 1
    0b1010000000010001,  // L=16: x^16 + x^15 + x^13 + x^4 + 1
};

bool even_parity32(std::uint32_t v) {
    v ^= v >> 16;
    v ^= v >> 8;
    v ^= v >> 4;
    v ^= v >> 2;
    v ^= v >> 1;
    return (v & 1u) == 0;
}

void check_detector(const DetectorConfig& cfg) {
    if (cfg.L < 2 || cfg.L > 16)
        throw std::invalid_argument("DetectorConfig: L must be in 2..16");
    if (cfg.N <= 2 * cfg.L) throw std::invalid_argument("DetectorConfig: requires N > 2L");
}

}  // namespace

PlaintextSource::PlaintextSource(int register_length, std::uint64_t seed) : length_(register_length) {
    if (length_ < 2 || length_ > 16)
        throw std::invalid_argument("PlaintextSource: register length must be in 2..16");
    taps_ = kMaximalTaps[length_ - 2];
    const std::uint64_t period = (std::uint64_t{1} << length_) - 1;
    state_ = static_cast<std::uint32_t>(seed % period) + 1;  // any nonzero state
}

int PlaintextSource::next_bit() {
    const int out = static_cast<int>(state_ & 1u);
    const std::uint32_t feedback = even_parity32(state_ & taps_) ? 0u : 1u;
    state_ = (state_ >> 1) | (feedback << (length_ - 1));
    return out;
}

Bits prg_stream(PlaintextSource& source, std::size_t length) {
    if (length == 0) throw std::invalid_argument("prg_stream: length must be positive");
    Bits out(length);
    for (auto& b : out) b = static_cast<std::uint8_t>(source.next_bit());
    return out;
}

std::size_t linear_complexity(const Bits& bits) {
    const std::size_t n = bits.size();
    Bits c(n + 1, 0), b(n + 1, 0);
    c[0] = 1;
    b[0] = 1;
    std::size_t complexity = 0;
    std::size_t m = 0;  // steps since the last length change, minus... m = i - last
    for (std::size_t i = 0; i < n; ++i) {
        ++m;
        int discrepancy = bits[i] & 1;
        for (std::size_t j = 1; j <= complexity; ++j) discrepancy ^= (c[j] & bits[i - j]) & 1;
        if (discrepancy == 0) continue;
        const Bits t = c;
        for (std::size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
        if (2 * complexity <= i) {
            complexity = i + 1 - complexity;
            b = t;
            m = 0;
        }
    }
    return complexity;
}

bool is_pseudorandom(const Bits& bits, const DetectorConfig& cfg) {
    check_detector(cfg);
    if (bits.size() < cfg.N)
        throw std::invalid_argument("is_pseudorandom: need at least N bits");
    const Bits window(bits.begin(), bits.begin() + cfg.N);
    return linear_complexity(window) <= cfg.L;
}

namespace {

// Destructive ciphertext supply: every qubit handed out is gone.
class QubitLedger {
public:
    QubitLedger(std::size_t supply) : remaining_(supply) {}

    void consume(std::size_t qubits) {
        if (qubits > remaining_)
            throw BudgetError("ciphertext supply exhausted after " + std::to_string(used_) +
                              " qubits");
        remaining_ -= qubits;
        used_ += qubits;
    }

    std::size_t used() const { return used_; }

private:
    std::size_t remaining_;
    std::size_t used_ = 0;
};

}  // namespace

AttackReport attack_probabilistic(std::size_t k, const DetectorConfig& cfg, Rng& rng,
                                  std::size_t supply_qubits) {
    if (k == 0 || k > 16) throw std::invalid_argument("attack_probabilistic: k must be in 1..16");
    check_detector(cfg);
    const std::size_t groups = std::size_t{1} << k;
    const std::size_t needed = k * groups * cfg.N;
    if (supply_qubits < needed)
        throw BudgetError("attack_probabilistic: needs " + std::to_string(needed) +
                          " qubits, supply is " + std::to_string(supply_qubits));

    const Key true_key{rng.derive("key").next_bits(k)};
    PlaintextSource source(static_cast<int>(cfg.L), rng.derive("plaintext").next_u64());
    Rng alice = rng.derive("alice");
    Rng eve = rng.derive("eve");
    QubitLedger ledger(supply_qubits);

    // Candidate keys in lexicographic order; group g holds ciphertext blocks
    // [gN, (g+1)N), so the true key's group decrypts to one contiguous
    // window of the source stream.
    AttackReport report;
    report.candidates_tested = groups;
    std::size_t passing = 0;
    Bits first_passing;
    for (std::uint64_t g = 0; g < groups; ++g) {
        const Key candidate{bits_from_index(g, k)};
        Bits decrypted(cfg.N);
        for (std::size_t t = 0; t < cfg.N; ++t) {
            const int m = source.next_bit();
            ParityString r = sample_parity_string(m, k, alice);
            const ProductState block = encode_bit(m, true_key, r);
            ledger.consume(k);
            decrypted[t] = static_cast<std::uint8_t>(decrypt_bit(block, candidate, eve));
        }
        if (is_pseudorandom(decrypted, cfg)) {
            ++passing;
            if (passing == 1) first_passing = candidate.bits;
        }
    }

    report.qubits_consumed = ledger.used();
    report.ambiguous = passing > 1;
    if (passing == 1) {
        report.recovered_key = first_passing;
        report.success = first_passing == true_key.bits;
    }
    return report;
}

AttackReport attack_probabilistic(std::size_t k, const DetectorConfig& cfg, Rng& rng) {
    return attack_probabilistic(k, cfg, rng, k * (std::size_t{1} << k) * cfg.N);
}

AttackReport attack_deterministic(std::size_t k, const DetectorConfig& cfg, Rng& rng,
                                  std::size_t supply_qubits) {
    if (k == 0 || k % 2 != 0)
        throw std::invalid_argument("attack_deterministic: k must be even and positive");
    check_detector(cfg);
    const std::size_t pairs = k / 2;
    const std::size_t needed = 2 * k * cfg.N;
    if (supply_qubits < needed)
        throw BudgetError("attack_deterministic: needs " + std::to_string(needed) +
                          " qubits, supply is " + std::to_string(supply_qubits));

    const Bits true_key = rng.derive("key").next_bits(k);  // pair j = (key[2j], key[2j+1])
    PlaintextSource source(static_cast<int>(cfg.L), rng.derive("plaintext").next_u64());
    Rng eve = rng.derive("eve");
    QubitLedger ledger(supply_qubits);

    // Alice's traffic: blocks of k/2 plaintext bits, position j encrypted
    // with key pair j. Position j across blocks is a decimated source
    // stream, which keeps linear complexity at most L.
    const std::size_t blocks = 4 * cfg.N;
    std::vector<std::vector<EncodedQubit>> traffic(blocks);
    for (std::size_t t = 0; t < blocks; ++t) {
        traffic[t].reserve(pairs);
        for (std::size_t j = 0; j < pairs; ++j)
            traffic[t].push_back(
                qpc_encrypt(source.next_bit(), true_key[2 * j], true_key[2 * j + 1]));
    }

    AttackReport report;
    Bits recovered(k, 0);
    bool all_unique = true;
    for (std::size_t j = 0; j < pairs; ++j) {
        std::size_t passing = 0;
        int best_s1 = 0, best_s2 = 0;
        for (int candidate = 0; candidate < 4; ++candidate) {
            const int s1 = (candidate >> 1) & 1;
            const int s2 = candidate & 1;
            // Candidate c consumes the position-j qubits of blocks
            // [cN, (c+1)N); disjoint slices keep measurement destructive.
            Bits decrypted(cfg.N);
            for (std::size_t t = 0; t < cfg.N; ++t) {
                const EncodedQubit& q = traffic[candidate * cfg.N + t][j];
                ledger.consume(1);
                decrypted[t] = static_cast<std::uint8_t>(measure_qubit(q, s1, eve) ^ s2);
            }
            report.candidates_tested += 1;
            if (is_pseudorandom(decrypted, cfg)) {
                ++passing;
                best_s1 = s1;
                best_s2 = s2;
            }
        }
        if (passing != 1) {
            all_unique = false;
            report.ambiguous = report.ambiguous || passing > 1;
        } else {
            recovered[2 * j] = static_cast<std::uint8_t>(best_s1);
            recovered[2 * j + 1] = static_cast<std::uint8_t>(best_s2);
        }
    }

    report.qubits_consumed = ledger.used();
    if (all_unique) {
        report.recovered_key = recovered;
        report.success = recovered == true_key;
    }
    return report;
}

AttackReport attack_deterministic(std::size_t k, const DetectorConfig& cfg, Rng& rng) {
    return attack_deterministic(k, cfg, rng, 2 * k * cfg.N);
}

std::vector<UnicityRow> compare_unicity(const std::vector<std::size_t>& k_values,
                                        const DetectorConfig& cfg, Rng& rng) {
    std::vector<UnicityRow> rows;
    rows.reserve(k_values.size());
    for (std::size_t k : k_values) {
        Rng prob_rng = rng.derive("probabilistic").derive(k);
        Rng det_rng = rng.derive("deterministic").derive(k);
        const AttackReport prob = attack_probabilistic(k, cfg, prob_rng);
        const AttackReport det = attack_deterministic(k, cfg, det_rng);
        rows.push_back(UnicityRow{
            k, prob.qubits_consumed, det.qubits_consumed,
            static_cast<double>(prob.qubits_consumed) / static_cast<double>(det.qubits_consumed),
            prob.success, det.success});
    }
    return rows;
}

}  // namespace qpenc
