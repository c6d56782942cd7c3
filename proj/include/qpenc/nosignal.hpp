// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qpenc/attacks.hpp"
#include "qpenc/linalg.hpp"
#include "qpenc/rng.hpp"
#include "qpenc/scheme.hpp"

namespace qpenc {

// One round of the entangled-channel construction: Alice measures her half
// of a Bell pair in basis b and Eve's qubit collapses to |outcome>_b.
struct BellExperimentResult {
    int basis_choice;
    int alice_outcome;
    DensityOperator eve_state;
};

// (sqrt2/2)(|00> + |11>)
std::vector<cplx> bell_pair();

// Alice measures her half in basis b; outcomes are fair coins and Eve's
// post-measurement state is the matching conjugate-coded projector.
BellExperimentResult alice_measure(int b, Rng& rng);

// Eve's exact marginal, averaged over Alice's outcomes: I/2 for either basis.
DensityOperator eve_marginal(int b);

// |Pr[outcome 0 | b=0] - Pr[outcome 0 | b=1]| on the exact marginals; zero
// for every POVM, which is what rules out a basis-reading map.
double signalling_advantage(const Povm& povm);

}  // namespace qpenc
