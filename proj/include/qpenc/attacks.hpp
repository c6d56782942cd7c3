// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qpenc/bits.hpp"
#include "qpenc/linalg.hpp"
#include "qpenc/rng.hpp"
#include "qpenc/scheme.hpp"

namespace qpenc {

// Finite positive-operator-valued measure: positive elements summing to the
// identity, one outcome label per element.
class Povm {
public:
    // Checked construction: positivity within 1e-10 and completeness within
    // 1e-10 are verified element by element.
    static Povm checked(std::vector<ComplexMatrix> elements, std::vector<std::string> labels);
    // For internally generated measurements whose structure guarantees the
    // invariants (rank-one projectors of an orthonormal product basis).
    static Povm trusted(std::vector<ComplexMatrix> elements, std::vector<std::string> labels);

    const std::vector<ComplexMatrix>& elements() const { return elements_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t dim() const { return elements_.front().dim(); }
    std::size_t size() const { return elements_.size(); }

private:
    Povm(std::vector<ComplexMatrix> elements, std::vector<std::string> labels);

    std::vector<ComplexMatrix> elements_;
    std::vector<std::string> labels_;
};

// Born probabilities p(label) = Tr(rho E_label).
ProbabilityDistribution outcome_distribution(const DensityOperator& rho, const Povm& povm);

// Orthonormal single-qubit basis rotated by theta from computational:
// e0 = cos(theta)|0> + sin(theta)|1>, e1 = -sin(theta)|0> + cos(theta)|1>.
struct SingleQubitBasis {
    double angle;
    std::vector<cplx> e0;
    std::vector<cplx> e1;
};
SingleQubitBasis rotated_basis(double theta);

// The pi/8-rotated basis: the eigenbasis of the one-qubit cipher state of 0.
SingleQubitBasis breidbart_basis();

// k-fold tensor of a single-qubit projective basis; 2^k rank-one projectors
// labeled by outcome bit strings.
Povm product_basis_povm(const SingleQubitBasis& basis, std::size_t k);
Povm breidbart_povm(std::size_t k);

// Closed form 2 * (-1)^{w(r)} * (sqrt2/4)^k for the Breidbart outcome
// probability difference P_r(rho_0^k) - P_r(rho_1^k).
double breidbart_prob_difference(const Bits& r, std::size_t k);

// Kolmogorov distance of the two exact Breidbart outcome distributions.
double breidbart_classical_distance(std::size_t k);

struct ScanResult {
    double best_distance;
    double best_angle;          // lowest angle among ties
    bool breidbart_is_argmax;   // pi/8 attains the grid maximum
    std::vector<double> distances;  // one per grid angle, ascending angle
    std::vector<double> angles;
};

// Kolmogorov distance of the rho_0^k / rho_1^k outcome pair over the family
// of k-fold products of a theta-rotated basis, theta on a uniform grid over
// [0, pi/2). Grid points are evaluated independently (parallelizable) and
// reduced in ascending angle order.
ScanResult measurement_family_scan(std::size_t k, std::size_t grid_size);

// One label drawn from an already-computed outcome distribution.
std::string sample_outcome(const ProbabilityDistribution& dist, Rng& rng);

// One Born-rule sample from measuring rho with the POVM.
std::string sample_measurement(const DensityOperator& rho, const Povm& povm, Rng& rng);
std::string sample_measurement(const ProductState& state, const Povm& povm, Rng& rng);

// Random POVM with the given number of elements: random positive operators
// A_i = G_i^dag G_i normalized through S^{-1/2} A_i S^{-1/2}.
Povm random_povm(std::size_t dim, std::size_t n_elements, Rng& rng);

}  // namespace qpenc
