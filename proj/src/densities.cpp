// SPDX-License-Identifier: Apache-2.0
#include "qpenc/densities.hpp"

#include <cmath>
#include <stdexcept>

#include "qpenc/errors.hpp"

namespace qpenc {

namespace {

const double kInvSqrt2 = 0.70710678118654752440;

void check_block_cap(std::size_t k) {
    if (k == 0) throw std::invalid_argument("density builder: k must be positive");
    if (k > kMaxBlockQubits)
        throw DimensionCapError("density builder: k exceeds cap " + std::to_string(kMaxBlockQubits));
}

// Accumulates |v><v| onto acc without materializing the projector.
void accumulate_outer(ComplexMatrix& acc, const std::vector<cplx>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == cplx{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < v.size(); ++j) acc.at(i, j) += v[i] * std::conj(v[j]);
    }
}

}  // namespace

std::vector<Bits> parity_class(int b, std::size_t k) {
    if (k == 0) throw std::invalid_argument("parity_class: k must be positive");
    std::vector<Bits> out;
    out.reserve(std::size_t{1} << (k - 1));
    for (const auto& r : all_bit_strings(k))
        if (parity(r) == (b & 1)) out.push_back(r);
    return out;
}

DensityOperator rho_b_direct(int b, std::size_t k) {
    check_block_cap(k);
    const std::size_t dim = std::size_t{1} << k;
    ComplexMatrix acc(dim);
    std::size_t terms = 0;
    for (const auto& s : all_bit_strings(k)) {
        for (const auto& r : parity_class(b, k)) {
            std::vector<EncodedQubit> qubits;
            qubits.reserve(k);
            for (std::size_t j = 0; j < k; ++j) qubits.push_back(EncodedQubit{r[j], s[j]});
            accumulate_outer(acc, ProductState(std::move(qubits)).state_vector());
            ++terms;
        }
    }
    // Normalization from the enumeration count, cross-checked against 2^{2k-1}.
    if (terms != (std::size_t{1} << (2 * k - 1)))
        throw InvariantError("rho_b_direct: enumeration count mismatch");
    acc *= cplx{1.0 / static_cast<double>(terms), 0.0};
    return DensityOperator(std::move(acc));
}

DensityOperator rho_b_recursive(int b, std::size_t k) {
    check_block_cap(k);
    if (k == 1) return rho_b_direct(b, 1);
    const ComplexMatrix rho0_1 = rho_b_direct(0, 1).matrix();
    const ComplexMatrix rho1_1 = rho_b_direct(1, 1).matrix();
    ComplexMatrix even = rho0_1;
    ComplexMatrix odd = rho1_1;
    for (std::size_t level = 2; level <= k; ++level) {
        ComplexMatrix next_even = cplx{0.5, 0.0} * (kron(even, rho0_1) + kron(odd, rho1_1));
        ComplexMatrix next_odd = cplx{0.5, 0.0} * (kron(even, rho1_1) + kron(odd, rho0_1));
        even = std::move(next_even);
        odd = std::move(next_odd);
    }
    return DensityOperator(b == 0 ? std::move(even) : std::move(odd));
}

DensityOperator sigma_b(int b, std::size_t k) {
    check_block_cap(k);
    const std::vector<cplx> phi0{kInvSqrt2, kInvSqrt2};  // |+>
    const std::vector<cplx> phi1{0.0, 1.0};              // |1>
    const std::size_t dim = std::size_t{1} << k;
    ComplexMatrix acc(dim);
    std::size_t terms = 0;
    for (const auto& i : parity_class(b, k)) {
        std::vector<cplx> v = i[0] ? phi1 : phi0;
        for (std::size_t j = 1; j < k; ++j) v = kron(v, i[j] ? phi1 : phi0);
        accumulate_outer(acc, v);
        ++terms;
    }
    if (terms != (std::size_t{1} << (k - 1)))
        throw InvariantError("sigma_b: enumeration count mismatch");
    acc *= cplx{1.0 / static_cast<double>(terms), 0.0};
    return DensityOperator(std::move(acc));
}

std::vector<ComplexMatrix> hadamard_kraus(std::size_t k) {
    check_block_cap(k);
    ComplexMatrix eye = ComplexMatrix::identity(2);
    ComplexMatrix hadamard(2);
    hadamard.at(0, 0) = kInvSqrt2;
    hadamard.at(0, 1) = kInvSqrt2;
    hadamard.at(1, 0) = kInvSqrt2;
    hadamard.at(1, 1) = -kInvSqrt2;

    const double weight = std::pow(kInvSqrt2, static_cast<double>(k));
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(std::size_t{1} << k);
    for (const auto& i : all_bit_strings(k)) {
        ComplexMatrix u = i[0] ? hadamard : eye;
        for (std::size_t j = 1; j < k; ++j) u = kron(u, i[j] ? hadamard : eye);
        u *= cplx{weight, 0.0};
        kraus.push_back(std::move(u));
    }
    return kraus;
}

DensityOperator hadamard_mixing_channel(const DensityOperator& input, std::size_t k) {
    check_block_cap(k);
    if (input.dim() != (std::size_t{1} << k))
        throw DimensionMismatchError("hadamard_mixing_channel: input dimension is not 2^k");
    ComplexMatrix acc(input.dim());
    for (const auto& u : hadamard_kraus(k)) acc += u * input.matrix() * u.adjoint();
    return DensityOperator(std::move(acc));
}

DensityOperator plaintext_density(const Bits& x, std::size_t k) {
    check_block_cap(k);
    if (x.empty()) throw std::invalid_argument("plaintext_density: empty plaintext");
    if (x.size() * k > kMaxTotalQubits)
        throw DimensionCapError("plaintext_density: n*k exceeds cap " +
                                std::to_string(kMaxTotalQubits));
    ComplexMatrix acc = rho_b_direct(x[0], k).matrix();
    for (std::size_t i = 1; i < x.size(); ++i) acc = kron(acc, rho_b_direct(x[i], k).matrix());
    return DensityOperator(std::move(acc));
}

namespace {

// Per-block receiver state for a fixed key: average over the message bit and
// the parity string, i.e. over all r in {0,1}^k.
ComplexMatrix receiver_block(const Bits& s, std::size_t k) {
    const std::size_t dim = std::size_t{1} << k;
    ComplexMatrix acc(dim);
    std::size_t terms = 0;
    for (int m : {0, 1}) {
        for (const auto& r : parity_class(m, k)) {
            std::vector<EncodedQubit> qubits;
            qubits.reserve(k);
            for (std::size_t j = 0; j < k; ++j) qubits.push_back(EncodedQubit{r[j], s[j]});
            accumulate_outer(acc, ProductState(std::move(qubits)).state_vector());
            ++terms;
        }
    }
    if (terms != (std::size_t{1} << k))
        throw InvariantError("receiver_ensemble: enumeration count mismatch");
    acc *= cplx{1.0 / static_cast<double>(terms), 0.0};
    return acc;
}

}  // namespace

DensityOperator receiver_ensemble(std::size_t n, std::size_t k) {
    check_block_cap(k);
    if (n == 0) throw std::invalid_argument("receiver_ensemble: n must be positive");
    if (n * k > kMaxTotalQubits)
        throw DimensionCapError("receiver_ensemble: n*k exceeds cap");
    // The fixed-key block must not depend on which key is fixed.
    const auto keys = all_bit_strings(k);
    ComplexMatrix block = receiver_block(keys.front(), k);
    for (std::size_t i = 1; i < keys.size(); ++i)
        if (receiver_block(keys[i], k).max_abs_diff(block) > 1e-12)
            throw InvariantError("receiver_ensemble: block depends on the key");
    ComplexMatrix acc = block;
    for (std::size_t i = 1; i < n; ++i) acc = kron(acc, block);
    return DensityOperator(std::move(acc));
}

DensityOperator eve_ensemble(std::size_t n, std::size_t k) {
    check_block_cap(k);
    if (n == 0) throw std::invalid_argument("eve_ensemble: n must be positive");
    if (n * k > kMaxTotalQubits) throw DimensionCapError("eve_ensemble: n*k exceeds cap");
    const std::size_t dim = std::size_t{1} << k;
    ComplexMatrix block(dim);
    std::size_t terms = 0;
    for (const auto& s : all_bit_strings(k)) {
        for (int m : {0, 1}) {
            for (const auto& r : parity_class(m, k)) {
                std::vector<EncodedQubit> qubits;
                qubits.reserve(k);
                for (std::size_t j = 0; j < k; ++j) qubits.push_back(EncodedQubit{r[j], s[j]});
                accumulate_outer(block, ProductState(std::move(qubits)).state_vector());
                ++terms;
            }
        }
    }
    if (terms != (std::size_t{1} << (2 * k)))
        throw InvariantError("eve_ensemble: enumeration count mismatch");
    block *= cplx{1.0 / static_cast<double>(terms), 0.0};
    ComplexMatrix acc = block;
    for (std::size_t i = 1; i < n; ++i) acc = kron(acc, block);
    return DensityOperator(std::move(acc));
}

double analytic_distance(std::size_t k) {
    if (k == 0) throw std::invalid_argument("analytic_distance: k must be positive");
    return std::pow(kInvSqrt2, static_cast<double>(k));
}

}  // namespace qpenc
