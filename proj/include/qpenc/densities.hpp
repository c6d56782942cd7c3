// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "qpenc/bits.hpp"
#include "qpenc/linalg.hpp"
#include "qpenc/scheme.hpp"

namespace qpenc {

// Builders are capped at k qubits per block such that 2^k stays within the
// eigensolver cap.
inline constexpr std::size_t kMaxBlockQubits = 8;
// Ensembles over n blocks of k qubits are capped by the kron dimension cap.
inline constexpr std::size_t kMaxTotalQubits = 12;

// All 2^{k-1} parity-class members of Omega_b^k, lexicographic.
std::vector<Bits> parity_class(int b, std::size_t k);

// Cipher-state density operator of one plaintext bit, enumerated over all
// 2^k keys and all 2^{k-1} parity strings (normalization recomputed from the
// enumeration count).
DensityOperator rho_b_direct(int b, std::size_t k);

// Same operator through the two-branch recursion
//   rho_0^k = (rho_0^{k-1} x rho_0^1 + rho_1^{k-1} x rho_1^1)/2,
//   rho_1^k = (rho_0^{k-1} x rho_1^1 + rho_1^{k-1} x rho_0^1)/2.
DensityOperator rho_b_recursive(int b, std::size_t k);

// Parity-constrained mixture of |phi_{i_1}>...|phi_{i_k}| projectors with
// phi_0 = |+>, phi_1 = |1>.
DensityOperator sigma_b(int b, std::size_t k);

// Kraus elements U_i = (sqrt2/2)^k H^{i_1} x ... x H^{i_k} over i in {0,1}^k.
std::vector<ComplexMatrix> hadamard_kraus(std::size_t k);

// The trace-preserving mixing channel sum_i U_i rho U_i^dag; maps sigma_b to
// rho_b.
DensityOperator hadamard_mixing_channel(const DensityOperator& input, std::size_t k);

// Eve's view of a fixed plaintext x: tensor product of per-bit cipher states.
DensityOperator plaintext_density(const Bits& x, std::size_t k);

// Receiver-side ensemble (key fixed, message and randomness averaged); the
// per-key block is checked to be key-independent before tensoring.
DensityOperator receiver_ensemble(std::size_t n, std::size_t k);
// Eavesdropper ensemble (key, message and randomness all averaged).
DensityOperator eve_ensemble(std::size_t n, std::size_t k);

// Closed form (sqrt2/2)^k for the one-bit cipher pair distance.
double analytic_distance(std::size_t k);

}  // namespace qpenc
