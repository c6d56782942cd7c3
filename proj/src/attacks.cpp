// SPDX-License-Identifier: Apache-2.0
#include "qpenc/attacks.hpp"

#include <cmath>
#include <stdexcept>

#include "qpenc/densities.hpp"
#include "qpenc/errors.hpp"
#include "qpenc/parallel.hpp"

namespace qpenc {

namespace {

constexpr double kPovmTol = 1e-10;
const double kPi = 3.14159265358979323846;

}  // namespace

Povm::Povm(std::vector<ComplexMatrix> elements, std::vector<std::string> labels)
    : elements_(std::move(elements)), labels_(std::move(labels)) {
    if (elements_.empty()) throw std::invalid_argument("Povm: no elements");
    if (elements_.size() != labels_.size())
        throw std::invalid_argument("Povm: element/label count mismatch");
    const std::size_t d = elements_.front().dim();
    for (const auto& e : elements_)
        if (e.dim() != d) throw DimensionMismatchError("Povm: elements of mixed dimension");
}

Povm Povm::checked(std::vector<ComplexMatrix> elements, std::vector<std::string> labels) {
    Povm povm(std::move(elements), std::move(labels));
    const std::size_t d = povm.dim();
    ComplexMatrix sum(d);
    for (const auto& e : povm.elements_) {
        if (e.hermiticity_defect() > kPovmTol)
            throw InvariantError("Povm: element is not Hermitian");
        const auto spectrum = hermitian_eigenvalues(e);
        if (spectrum.back() < -kPovmTol)
            throw InvariantError("Povm: element has eigenvalue " + std::to_string(spectrum.back()));
        sum += e;
    }
    if (sum.max_abs_diff(ComplexMatrix::identity(d)) > kPovmTol)
        throw InvariantError("Povm: elements do not sum to the identity");
    return povm;
}

Povm Povm::trusted(std::vector<ComplexMatrix> elements, std::vector<std::string> labels) {
    return Povm(std::move(elements), std::move(labels));
}

ProbabilityDistribution outcome_distribution(const DensityOperator& rho, const Povm& povm) {
    if (rho.dim() != povm.dim())
        throw DimensionMismatchError("outcome_distribution: dimension mismatch");
    const std::size_t d = rho.dim();
    std::map<std::string, double> probs;
    for (std::size_t m = 0; m < povm.size(); ++m) {
        // Tr(rho E) = sum_ij rho_ij E_ji
        cplx tr{0.0, 0.0};
        const auto& e = povm.elements()[m];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) tr += rho.matrix().at(i, j) * e.at(j, i);
        probs[povm.labels()[m]] = tr.real();
    }
    return ProbabilityDistribution(std::move(probs));
}

SingleQubitBasis rotated_basis(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return SingleQubitBasis{theta, {c, s}, {-s, c}};
}

SingleQubitBasis breidbart_basis() { return rotated_basis(kPi / 8.0); }

Povm product_basis_povm(const SingleQubitBasis& basis, std::size_t k) {
    if (k == 0) throw std::invalid_argument("product_basis_povm: k must be positive");
    if (k > kMaxBlockQubits) throw DimensionCapError("product_basis_povm: k exceeds cap");
    std::vector<ComplexMatrix> elements;
    std::vector<std::string> labels;
    elements.reserve(std::size_t{1} << k);
    for (const auto& r : all_bit_strings(k)) {
        std::vector<cplx> v = r[0] ? basis.e1 : basis.e0;
        for (std::size_t j = 1; j < k; ++j) v = kron(v, r[j] ? basis.e1 : basis.e0);
        elements.push_back(ComplexMatrix::outer(v));
        labels.push_back(to_string(r));
    }
    return Povm::trusted(std::move(elements), std::move(labels));
}

Povm breidbart_povm(std::size_t k) { return product_basis_povm(breidbart_basis(), k); }

double breidbart_prob_difference(const Bits& r, std::size_t k) {
    if (r.size() != k) throw DimensionMismatchError("breidbart_prob_difference: |r| != k");
    const double base = std::pow(std::sqrt(2.0) / 4.0, static_cast<double>(k));
    const double sign = (hamming_weight(r) % 2 == 0) ? 1.0 : -1.0;
    return 2.0 * sign * base;
}

double breidbart_classical_distance(std::size_t k) {
    if (k > kMaxBlockQubits)
        throw DimensionCapError("breidbart_classical_distance: k exceeds cap");
    const Povm povm = breidbart_povm(k);
    const auto beta = outcome_distribution(rho_b_direct(0, k), povm);
    const auto gamma = outcome_distribution(rho_b_direct(1, k), povm);
    return kolmogorov_distance(beta, gamma);
}

ScanResult measurement_family_scan(std::size_t k, std::size_t grid_size) {
    if (k == 0 || k > 4)
        throw std::invalid_argument("measurement_family_scan: k must be in 1..4");
    if (grid_size == 0) throw std::invalid_argument("measurement_family_scan: empty family");

    const DensityOperator rho0 = rho_b_direct(0, k);
    const DensityOperator rho1 = rho_b_direct(1, k);

    ScanResult result;
    result.angles.resize(grid_size);
    result.distances.resize(grid_size);
    parallel_for(grid_size, [&](std::size_t j) {
        const double theta = (kPi / 2.0) * static_cast<double>(j) / static_cast<double>(grid_size);
        const Povm povm = product_basis_povm(rotated_basis(theta), k);
        result.angles[j] = theta;
        result.distances[j] =
            kolmogorov_distance(outcome_distribution(rho0, povm), outcome_distribution(rho1, povm));
    });

    // Deterministic reduction in ascending angle order; lowest angle wins ties.
    std::size_t best = 0;
    for (std::size_t j = 1; j < grid_size; ++j)
        if (result.distances[j] > result.distances[best]) best = j;
    result.best_distance = result.distances[best];
    result.best_angle = result.angles[best];
    const double pi_8 = kPi / 8.0;
    result.breidbart_is_argmax = std::abs(result.best_angle - pi_8) < 1e-12;
    return result;
}

std::string sample_outcome(const ProbabilityDistribution& dist, Rng& rng) {
    const double u = rng.next_double();
    double acc = 0.0;
    const auto& outcomes = dist.outcomes();
    for (const auto& [label, p] : outcomes) {
        acc += p;
        if (u < acc) return label;
    }
    return outcomes.rbegin()->first;
}

std::string sample_measurement(const DensityOperator& rho, const Povm& povm, Rng& rng) {
    return sample_outcome(outcome_distribution(rho, povm), rng);
}

std::string sample_measurement(const ProductState& state, const Povm& povm, Rng& rng) {
    return sample_measurement(state.density(), povm, rng);
}

Povm random_povm(std::size_t dim, std::size_t n_elements, Rng& rng) {
    if (dim == 0 || n_elements == 0) throw std::invalid_argument("random_povm: empty");
    std::vector<ComplexMatrix> raw;
    raw.reserve(n_elements);
    ComplexMatrix sum(dim);
    for (std::size_t m = 0; m < n_elements; ++m) {
        ComplexMatrix g(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                g.at(i, j) = cplx{rng.next_gaussian(), rng.next_gaussian()};
        ComplexMatrix a = g.adjoint() * g;
        sum += a;
        raw.push_back(std::move(a));
    }
    // Whiten: E_i = S^{-1/2} A_i S^{-1/2} sums to the identity by construction.
    const EigenSystem sys = hermitian_eigensystem(sum);
    ComplexMatrix inv_sqrt(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            cplx acc{0.0, 0.0};
            for (std::size_t m = 0; m < dim; ++m)
                acc += sys.vectors.at(i, m) * std::conj(sys.vectors.at(j, m)) /
                       std::sqrt(sys.values[m]);
            inv_sqrt.at(i, j) = acc;
        }
    std::vector<ComplexMatrix> elements;
    std::vector<std::string> labels;
    for (std::size_t m = 0; m < n_elements; ++m) {
        elements.push_back(inv_sqrt * raw[m] * inv_sqrt);
        labels.push_back(std::to_string(m));
    }
    return Povm::checked(std::move(elements), std::move(labels));
}

}  // namespace qpenc
