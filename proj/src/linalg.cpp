// SPDX-License-Identifier: Apache-2.0
#include "qpenc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qpenc/errors.hpp"

namespace qpenc {

namespace {

constexpr double kOffDiagonalTol = 1e-13;
constexpr int kMaxSweeps = 100;
constexpr double kHermitianAcceptTol = 1e-10;

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_)
        throw std::invalid_argument("ComplexMatrix: entry count must be dim^2");
    if (!all_finite()) throw std::invalid_argument("ComplexMatrix: entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m.at(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(const std::vector<cplx>& v) {
    ComplexMatrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m.at(i, j) = v[i] * std::conj(v[j]);
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m.at(j, i) = std::conj(at(i, j));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double acc = 0.0;
    for (const auto& e : entries_) acc += std::norm(e);
    return std::sqrt(acc);
}

double ComplexMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
    return worst;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (other.dim_ != dim_) throw DimensionMismatchError("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    return worst;
}

bool ComplexMatrix::all_finite() const {
    for (const auto& e : entries_)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) throw DimensionMismatchError("matrix add: dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) throw DimensionMismatchError("matrix sub: dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
    for (auto& e : entries_) e *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatchError("matrix mul: dimension mismatch");
    const std::size_t n = a.dim_;
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a.at(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.all_finite() || !b.all_finite())
        throw std::invalid_argument("kron: operands must be finite");
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    if (da == 0 || db == 0) throw std::invalid_argument("kron: empty operand");
    if (da > kDimensionCap / db)
        throw DimensionCapError("kron: result dimension exceeds cap " + std::to_string(kDimensionCap));
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const cplx aij = a.at(i, j);
            if (aij == cplx{0.0, 0.0}) continue;
            for (std::size_t p = 0; p < db; ++p)
                for (std::size_t q = 0; q < db; ++q)
                    out.at(i * db + p, j * db + q) = aij * b.at(p, q);
        }
    return out;
}

std::vector<cplx> kron(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() > kDimensionCap / b.size())
        throw DimensionCapError("kron: vector dimension exceeds cap");
    std::vector<cplx> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (i != j) acc += std::norm(m.at(i, j));
    return std::sqrt(acc);
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& a, bool want_vectors) {
    const std::size_t n = a.dim();
    if (n == 0) throw std::invalid_argument("hermitian_eigensystem: empty matrix");
    if (n > kEigenDimensionCap)
        throw DimensionCapError("hermitian_eigensystem: dimension above eigensolver cap");
    const double defect = a.hermiticity_defect();
    if (defect >= kHermitianAcceptTol)
        throw SymmetryError("hermitian_eigensystem: hermiticity defect " + std::to_string(defect));

    // Absorb rounding: work on (A + A^dag)/2.
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    // Entries below this never matter for the 1e-13 target.
    const double skip = 1e-18 + 1e-16 * m.frobenius_norm();

    int sweep = 0;
    while (n > 1 && off_diagonal_norm(m) >= kOffDiagonalTol) {
        if (++sweep > kMaxSweeps)
            throw ConvergenceError("hermitian_eigensystem: no convergence after max sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx w = m.at(p, q);
                const double wabs = std::abs(w);
                if (wabs <= skip) continue;

                // Unitary 2x2 rotation zeroing (p,q): phase from the pivot,
                // angle from the classic tan(2theta) rule.
                const cplx phase = w / wabs;
                const double u = m.at(p, p).real();
                const double vdiag = m.at(q, q).real();
                const double tau = (vdiag - u) / (2.0 * wabs);
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx s_phase = s * phase;
                const cplx s_phase_conj = s * std::conj(phase);

                // Columns: col_p' = c col_p - s e^{-i phi} col_q,
                //          col_q' = s e^{+i phi} col_p + c col_q.
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx mip = m.at(i, p);
                    const cplx miq = m.at(i, q);
                    m.at(i, p) = c * mip - s_phase_conj * miq;
                    m.at(i, q) = s_phase * mip + c * miq;
                }
                // Rows (left-multiplication by the adjoint rotation).
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx mpj = m.at(p, j);
                    const cplx mqj = m.at(q, j);
                    m.at(p, j) = c * mpj - s_phase * mqj;
                    m.at(q, j) = s_phase_conj * mpj + c * mqj;
                }
                m.at(p, q) = 0.0;
                m.at(q, p) = 0.0;
                m.at(p, p) = cplx{m.at(p, p).real(), 0.0};
                m.at(q, q) = cplx{m.at(q, q).real(), 0.0};

                if (want_vectors) {
                    for (std::size_t i = 0; i < n; ++i) {
                        const cplx vip = v.at(i, p);
                        const cplx viq = v.at(i, q);
                        v.at(i, p) = c * vip - s_phase_conj * viq;
                        v.at(i, q) = s_phase * vip + c * viq;
                    }
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return m.at(i, i).real() > m.at(j, j).real();
    });

    EigenSystem sys;
    sys.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) sys.values[j] = m.at(order[j], order[j]).real();

    // Rotations preserve the trace; a drift here means the solve went wrong.
    double value_sum = 0.0;
    for (double v : sys.values) value_sum += v;
    if (std::abs(value_sum - a.trace().real()) > 1e-9)
        throw ConvergenceError("hermitian_eigensystem: eigenvalue sum drifted from the trace");
    if (want_vectors) {
        sys.vectors = ComplexMatrix(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) sys.vectors.at(i, j) = v.at(i, order[j]);
    }
    return sys;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
    return hermitian_eigensystem(a, /*want_vectors=*/false).values;
}

DensityOperator::DensityOperator(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.dim() == 0) throw InvariantError("DensityOperator: empty matrix");
    const double defect = matrix_.hermiticity_defect();
    if (defect > 1e-12)
        throw InvariantError("DensityOperator: hermiticity defect " + std::to_string(defect));
    const cplx tr = matrix_.trace();
    if (std::abs(tr - cplx{1.0, 0.0}) > 1e-12)
        throw InvariantError("DensityOperator: trace deviates from 1");
    const auto spectrum = hermitian_eigenvalues(matrix_);
    if (spectrum.back() < -1e-10)
        throw InvariantError("DensityOperator: negative eigenvalue " + std::to_string(spectrum.back()));
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("trace_distance: dimension mismatch");
    auto spectrum = hermitian_eigenvalues(a.matrix() - b.matrix());
    for (double& lambda : spectrum) lambda = std::abs(lambda);
    // Fixed summation order keeps D(a,b) and D(b,a) bit-identical.
    std::sort(spectrum.begin(), spectrum.end());
    double acc = 0.0;
    for (double lambda : spectrum) acc += lambda;
    const double d = 0.5 * acc;
    if (d < -1e-9 || d > 1.0 + 1e-9)
        throw InvariantError("trace_distance: value escaped [0,1]");
    return std::clamp(d, 0.0, 1.0);
}

ProbabilityDistribution::ProbabilityDistribution(std::map<std::string, double> outcomes)
    : outcomes_(std::move(outcomes)) {
    double sum = 0.0;
    for (auto& [label, p] : outcomes_) {
        if (p < -1e-12 || p > 1.0 + 1e-12)
            throw InvariantError("ProbabilityDistribution: probability of '" + label +
                                 "' escaped [0,1]");
        p = std::clamp(p, 0.0, 1.0);
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw InvariantError("ProbabilityDistribution: probabilities sum to " + std::to_string(sum));
}

double ProbabilityDistribution::at(const std::string& label) const {
    auto it = outcomes_.find(label);
    if (it == outcomes_.end())
        throw std::out_of_range("ProbabilityDistribution: unknown outcome '" + label + "'");
    return it->second;
}

double kolmogorov_distance(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
    const auto& po = p.outcomes();
    const auto& qo = q.outcomes();
    if (po.size() != qo.size())
        throw DimensionMismatchError("kolmogorov_distance: outcome spaces differ");
    double acc = 0.0;
    auto itp = po.begin();
    auto itq = qo.begin();
    for (; itp != po.end(); ++itp, ++itq) {
        if (itp->first != itq->first)
            throw DimensionMismatchError("kolmogorov_distance: outcome spaces differ");
        acc += std::abs(itp->second - itq->second);
    }
    return 0.5 * acc;
}

}  // namespace qpenc
