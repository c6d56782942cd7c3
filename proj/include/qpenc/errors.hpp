// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qpenc {

// Requested operator dimension exceeds the configured cap.
struct DimensionCapError : std::runtime_error {
    explicit DimensionCapError(const std::string& what) : std::runtime_error(what) {}
};

// Two operands live in different Hilbert-space dimensions or outcome spaces.
struct DimensionMismatchError : std::runtime_error {
    explicit DimensionMismatchError(const std::string& what) : std::runtime_error(what) {}
};

// Input claimed Hermitian deviates from A = A^dagger beyond tolerance.
struct SymmetryError : std::runtime_error {
    explicit SymmetryError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative eigensolver failed to reach the off-diagonal target.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A type invariant (trace, positivity, completeness, parity...) is violated.
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Simulated ciphertext supply is smaller than the attack requires.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Redundancy predicate accepted two or more decryption candidates.
struct AmbiguityError : std::runtime_error {
    explicit AmbiguityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qpenc
