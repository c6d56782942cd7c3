// SPDX-License-Identifier: Apache-2.0
#include "qpenc/nosignal.hpp"

#include <cmath>
#include <stdexcept>

#include "qpenc/errors.hpp"

namespace qpenc {

namespace {

const double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

std::vector<cplx> bell_pair() { return {kInvSqrt2, 0.0, 0.0, kInvSqrt2}; }

BellExperimentResult alice_measure(int b, Rng& rng) {
    if (b & ~1) throw std::invalid_argument("alice_measure: basis must be 0/1");
    // In either basis the Bell state gives both outcomes with probability
    // 1/2, and Eve's side collapses to the same coded state.
    const int outcome = rng.next_bit();
    return BellExperimentResult{
        b, outcome, DensityOperator(qubit_projector(EncodedQubit{outcome, b}))};
}

DensityOperator eve_marginal(int b) {
    if (b & ~1) throw std::invalid_argument("eve_marginal: basis must be 0/1");
    ComplexMatrix acc = qubit_projector(EncodedQubit{0, b});
    acc += qubit_projector(EncodedQubit{1, b});
    acc *= cplx{0.5, 0.0};
    return DensityOperator(std::move(acc));
}

double signalling_advantage(const Povm& povm) {
    if (povm.dim() != 2) throw DimensionMismatchError("signalling_advantage: POVM must be 2x2");
    const std::string& first = povm.labels().front();
    const double p0 = outcome_distribution(eve_marginal(0), povm).at(first);
    const double p1 = outcome_distribution(eve_marginal(1), povm).at(first);
    return std::abs(p0 - p1);
}

}  // namespace qpenc
