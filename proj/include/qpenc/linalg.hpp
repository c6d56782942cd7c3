// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace qpenc {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. Carrier for every operator in the
// artifact (density operators, POVM elements, Kraus elements, gates).
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, cplx{0.0, 0.0}) {}
    ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(const std::vector<double>& values);
    // Rank-one projector |v><v| of a (not necessarily normalized) vector.
    static ComplexMatrix outer(const std::vector<cplx>& v);

    std::size_t dim() const { return dim_; }
    cplx& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const cplx& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    const std::vector<cplx>& entries() const { return entries_; }

    cplx trace() const;
    ComplexMatrix adjoint() const;
    double frobenius_norm() const;
    // max_ij |A_ij - conj(A_ji)|
    double hermiticity_defect() const;
    double max_abs_diff(const ComplexMatrix& other) const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scalar);
    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx scalar, ComplexMatrix a) { return a *= scalar; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t dim_ = 0;
    std::vector<cplx> entries_;
};

// Dimension caps. kron refuses results above kDimensionCap; the dense
// eigensolver refuses inputs above kEigenDimensionCap.
inline constexpr std::size_t kDimensionCap = std::size_t{1} << 12;
inline constexpr std::size_t kEigenDimensionCap = std::size_t{1} << 8;

// Tensor product; the left factor indexes the coarse blocks.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<cplx> kron(const std::vector<cplx>& a, const std::vector<cplx>& b);

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column j is the eigenvector of values[j]
};

// Cyclic Jacobi rotations for complex Hermitian matrices. Converges when the
// off-diagonal Frobenius norm drops below off_tol; at most max_sweeps sweeps.
// Inputs with hermiticity defect below 1e-10 are symmetrized to (A+A^dag)/2;
// anything worse is rejected.
EigenSystem hermitian_eigensystem(const ComplexMatrix& a, bool want_vectors = true);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

// Hermitian complex matrix with unit trace and nonnegative spectrum.
// Construction checks all three invariants.
class DensityOperator {
public:
    explicit DensityOperator(ComplexMatrix matrix);

    const ComplexMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.dim(); }

private:
    ComplexMatrix matrix_;
};

// D(a, b) = 1/2 tr|a - b|, evaluated through the spectrum of the Hermitian
// difference. The maximum distinguishing advantage over all measurements.
double trace_distance(const DensityOperator& a, const DensityOperator& b);

// Finite distribution over bit-string outcome labels.
class ProbabilityDistribution {
public:
    explicit ProbabilityDistribution(std::map<std::string, double> outcomes);

    const std::map<std::string, double>& outcomes() const { return outcomes_; }
    double at(const std::string& label) const;

private:
    std::map<std::string, double> outcomes_;
};

// 1/2 sum_r |p(r) - q(r)| over a shared outcome space.
double kolmogorov_distance(const ProbabilityDistribution& p, const ProbabilityDistribution& q);

}  // namespace qpenc
