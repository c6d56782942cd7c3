// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qpenc/experiment.hpp"

namespace qpenc {

// Record-producing experiment drivers. Each returns one row per measured
// quantity with the analytic reference filled in; the CLI and the selftest
// suite share these so a command line and an acceptance run see the same
// numbers.

// trace-distance: eigensolver D(rho_0^k, rho_1^k) against (sqrt2/2)^k.
std::vector<ExperimentRecord> run_distance(const std::vector<std::size_t>& ks, std::uint64_t seed);

// plaintext-distance-<x>-vs-<y>: D of the cipher states of every pair of
// n-bit plaintexts. Tabulation only: no closed form is asserted, the
// analytic column stays 0.
std::vector<ExperimentRecord> run_plaintext_table(std::size_t n, std::size_t k,
                                                  std::uint64_t seed);

// recursion-consistency-b{0,1}: entrywise gap between the direct enumeration
// and the two-branch recursion.
std::vector<ExperimentRecord> run_recursion_check(const std::vector<std::size_t>& ks,
                                                  std::uint64_t seed);

// sigma-distance: D(sigma_0, sigma_1) against (sin pi/4)^k.
std::vector<ExperimentRecord> run_sigma_distance(const std::vector<std::size_t>& ks,
                                                 std::uint64_t seed);

// channel-identity-b{0,1} and kraus-completeness residuals.
std::vector<ExperimentRecord> run_channel_check(const std::vector<std::size_t>& ks,
                                                std::uint64_t seed);

// breidbart-p0, breidbart-prob-diff-dev (k <= 4), helstrom-saturation
// (classical vs quantum trace distance), breidbart-mc frequencies.
std::vector<ExperimentRecord> run_breidbart(const std::vector<std::size_t>& ks, long long trials,
                                            std::uint64_t seed);

// scan-best-distance and scan-argmax-angle per k over the rotated-basis grid.
std::vector<ExperimentRecord> run_scan(const std::vector<std::size_t>& ks, std::size_t grid_size,
                                       std::uint64_t seed);

// roundtrip-exhaustive (all (s, r, m) up to k_max) and roundtrip-mc at k=8.
std::vector<ExperimentRecord> run_protocol_check(std::size_t exhaustive_k_max, long long mc_trials,
                                                 std::uint64_t seed);

// nosignal-marginal-distance, nosignal-max-advantage over seeded POVMs,
// nosignal-empirical-dev-b{0,1} at the given trial count.
std::vector<ExperimentRecord> run_nosignal(long long trials, std::size_t n_povms,
                                           std::uint64_t seed);

// unicity-{prob,det}-{rate,qubits} and unicity-ratio per k.
std::vector<ExperimentRecord> run_unicity(const std::vector<std::size_t>& ks, std::size_t N,
                                          std::size_t L, std::size_t runs, std::uint64_t seed);

// complexity-{encryption,decryption,exhaustive} over a fixed 20-case grid,
// checked against independently evaluated closed forms.
std::vector<ExperimentRecord> run_complexity_grid(std::uint64_t seed);

// encrypt-demo-roundtrip: full message encrypt/decrypt at the given size.
std::vector<ExperimentRecord> run_encrypt_demo(std::size_t k, std::size_t n, long long trials,
                                               std::uint64_t seed);

}  // namespace qpenc
