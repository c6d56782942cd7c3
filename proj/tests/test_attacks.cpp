// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "qpenc/attacks.hpp"
#include "qpenc/densities.hpp"
#include "qpenc/errors.hpp"
#include "test_helpers.hpp"

using namespace qpenc;

namespace {

const double kInvSqrt2 = 0.70710678118654752440;
const double kPi = 3.14159265358979323846;

Povm computational_povm() {
    return Povm::checked({ComplexMatrix::diagonal({1.0, 0.0}), ComplexMatrix::diagonal({0.0, 1.0})},
                         {"0", "1"});
}

Povm uniform_povm() {
    ComplexMatrix half = ComplexMatrix::identity(2);
    half *= cplx{0.5, 0.0};
    return Povm::checked({half, half}, {"0", "1"});
}

}  // namespace

TEST_SUITE_BEGIN("attacks");

TEST_CASE("povm construction validates positivity and completeness") {
    CHECK_THROWS_AS(
        Povm::checked({ComplexMatrix::diagonal({1.5, 0.0}), ComplexMatrix::diagonal({-0.5, 1.0})},
                      {"0", "1"}),
        InvariantError);
    CHECK_THROWS_AS(
        Povm::checked({ComplexMatrix::diagonal({0.5, 0.5}), ComplexMatrix::diagonal({0.2, 0.2})},
                      {"0", "1"}),
        InvariantError);
}

TEST_CASE("outcome distribution on basis states and the uniform povm") {
    const DensityOperator zero(ComplexMatrix::diagonal({1.0, 0.0}));
    const auto dist = outcome_distribution(zero, computational_povm());
    CHECK(dist.at("0") == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dist.at("1") == doctest::Approx(0.0).epsilon(1e-15));

    Rng rng(3);
    const auto uniform = outcome_distribution(test::random_density(2, rng), uniform_povm());
    CHECK(uniform.at("0") == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(uniform.at("1") == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("outcome distribution rejects mismatched dimensions") {
    CHECK_THROWS_AS(outcome_distribution(rho_b_direct(0, 2), computational_povm()),
                    DimensionMismatchError);
}

TEST_CASE("breidbart probabilities on the one-qubit pair") {
    const Povm povm = breidbart_povm(1);
    const auto p0 = outcome_distribution(rho_b_direct(0, 1), povm);
    const auto p1 = outcome_distribution(rho_b_direct(1, 1), povm);
    const double c2 = std::cos(kPi / 8.0) * std::cos(kPi / 8.0);
    const double s2 = std::sin(kPi / 8.0) * std::sin(kPi / 8.0);
    CHECK(p0.at("0") == doctest::Approx(c2).epsilon(1e-14));
    CHECK(p0.at("1") == doctest::Approx(s2).epsilon(1e-14));
    CHECK(p1.at("0") == doctest::Approx(s2).epsilon(1e-14));
}

TEST_CASE("breidbart basis is the eigenbasis of the one-qubit cipher state") {
    const EigenSystem sys = hermitian_eigensystem(rho_b_direct(0, 1).matrix());
    const SingleQubitBasis basis = breidbart_basis();
    // Compare up to global phase through the overlap magnitude.
    const cplx overlap = std::conj(sys.vectors.at(0, 0)) * basis.e0[0] +
                         std::conj(sys.vectors.at(1, 0)) * basis.e0[1];
    CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("breidbart povm has 2^k complete elements") {
    const Povm povm = breidbart_povm(3);
    CHECK(povm.size() == 8);
    ComplexMatrix sum(8);
    for (const auto& e : povm.elements()) sum += e;
    CHECK(sum.max_abs_diff(ComplexMatrix::identity(8)) < 1e-12);
}

TEST_CASE("closed-form probability differences at k=1") {
    CHECK(breidbart_prob_difference({0}, 1) == doctest::Approx(kInvSqrt2).epsilon(1e-15));
    CHECK(breidbart_prob_difference({1}, 1) == doctest::Approx(-kInvSqrt2).epsilon(1e-15));
    CHECK_THROWS_AS(breidbart_prob_difference({0, 1}, 1), DimensionMismatchError);
}

TEST_CASE("closed-form differences match the exact povm evaluation") {
    for (std::size_t k = 1; k <= 4; ++k) {
        const Povm povm = breidbart_povm(k);
        const auto beta = outcome_distribution(rho_b_direct(0, k), povm);
        const auto gamma = outcome_distribution(rho_b_direct(1, k), povm);
        for (const auto& r : all_bit_strings(k)) {
            const double exact = beta.at(to_string(r)) - gamma.at(to_string(r));
            const double closed = breidbart_prob_difference(r, k);
            CHECK(std::abs(exact - closed) < 1e-12);
            // Sign alternates with the Hamming weight.
            CHECK((hamming_weight(r) % 2 == 0 ? exact > 0 : exact < 0));
        }
    }
}

TEST_CASE("breidbart classical distance follows (sqrt2/2)^k") {
    CHECK(breidbart_classical_distance(1) == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(breidbart_classical_distance(2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(breidbart_classical_distance(4) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("breidbart attains the trace distance (Helstrom saturation)") {
    for (std::size_t k = 1; k <= 6; ++k) {
        const double classical = breidbart_classical_distance(k);
        const double quantum = trace_distance(rho_b_direct(0, k), rho_b_direct(1, k));
        CHECK(std::abs(classical - quantum) < 1e-9);
    }
}

TEST_CASE("scan maximum sits at pi/8 and below the trace distance") {
    const ScanResult result = measurement_family_scan(1, 256);
    CHECK(result.breidbart_is_argmax);
    CHECK(result.best_angle == doctest::Approx(kPi / 8.0).epsilon(1e-15));
    CHECK(result.best_distance == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    // theta = 0 is the computational basis.
    CHECK(result.distances.front() == doctest::Approx(0.5).epsilon(1e-12));

    for (std::size_t k = 1; k <= 4; ++k) {
        const ScanResult scan = measurement_family_scan(k, 64);
        const double bound = trace_distance(rho_b_direct(0, k), rho_b_direct(1, k));
        for (double d : scan.distances) CHECK(d <= bound + 1e-9);
    }
    CHECK_THROWS_AS(measurement_family_scan(1, 0), std::invalid_argument);
}

TEST_CASE("sampling reproduces point masses exactly") {
    Rng rng(4);
    const DensityOperator one(ComplexMatrix::diagonal({0.0, 1.0}));
    for (int t = 0; t < 50; ++t)
        CHECK(sample_measurement(one, computational_povm(), rng) == "1");

    // Product-state overload: |10> measured in the computational product basis.
    const ProductState state({EncodedQubit{1, 0}, EncodedQubit{0, 0}});
    const Povm povm = product_basis_povm(rotated_basis(0.0), 2);
    for (int t = 0; t < 20; ++t) CHECK(sample_measurement(state, povm, rng) == "10");
}

TEST_CASE("sampling frequencies match the exact distribution") {
    Rng rng(5);
    const int trials = 100000;
    const double p = std::cos(kPi / 8.0) * std::cos(kPi / 8.0);
    const auto dist = outcome_distribution(rho_b_direct(0, 1), breidbart_povm(1));
    int zeros = 0;
    for (int t = 0; t < trials; ++t)
        if (sample_outcome(dist, rng) == "0") ++zeros;
    CHECK(std::abs(zeros - p * trials) <= 3.0 * std::sqrt(p * (1 - p) * trials));

    const auto uniform = outcome_distribution(rho_b_direct(0, 1), uniform_povm());
    int heads = 0;
    for (int t = 0; t < trials; ++t)
        if (sample_outcome(uniform, rng) == "0") ++heads;
    CHECK(std::abs(heads - trials / 2.0) <= 3.0 * std::sqrt(0.25 * trials));
}

TEST_CASE("measurement statistics contract the trace distance") {
    Rng rng(6);
    for (std::size_t dim : {2, 4}) {
        for (int trial = 0; trial < 10; ++trial) {
            const DensityOperator a = test::random_density(dim, rng);
            const DensityOperator b = test::random_density(dim, rng);
            const Povm povm = random_povm(dim, 2 + rng.next_below(3), rng);
            const double classical =
                kolmogorov_distance(outcome_distribution(a, povm), outcome_distribution(b, povm));
            CHECK(classical <= trace_distance(a, b) + 1e-9);
        }
    }
}

TEST_SUITE_END();
