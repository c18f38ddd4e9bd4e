#include "fermisea/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>
#include <sstream>

namespace fermisea {

double compensated_sum(std::span<const double> values) {
    CompensatedSum s;
    for(double v : values) s += v;
    return s.value();
}

namespace {

void fix_phase(Eigen::Ref<CVector> v) {
    Index  best     = 0;
    double best_abs = -1.0;
    for(Index i = 0; i < v.size(); ++i) {
        // Strict comparison keeps the first index on ties; the 1e-14 margin
        // stops rounding noise from flipping between near-equal entries.
        const double a = std::abs(v[i]);
        if(a > best_abs + 1e-14) {
            best     = i;
            best_abs = a;
        }
    }
    if(best_abs <= 0.0) return;
    v *= std::conj(v[best]) / best_abs;
    v[best] = cplx(best_abs, 0.0);
}

bool real_parts_less(const CVector &a, const CVector &b) {
    for(Index i = 0; i < a.size(); ++i) {
        if(a[i].real() < b[i].real() - 1e-12) return true;
        if(a[i].real() > b[i].real() + 1e-12) return false;
    }
    return false;
}

} // namespace

HermitianEigen hermitian_eigen(const CMatrix &matrix) {
    if(matrix.rows() != matrix.cols()) throw InvalidInput("hermitian_eigen: matrix is not square");
    const Index n = matrix.rows();
    if(n == 0) return {};

    Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix);
    if(solver.info() != Eigen::Success) throw NumericalError("hermitian_eigen: eigensolver did not converge");

    CMatrix vecs = solver.eigenvectors();
    for(Index j = 0; j < n; ++j) fix_phase(vecs.col(j));

    const RVector      &vals = solver.eigenvalues();
    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        if(std::abs(vals[a] - vals[b]) > 1e-12) return vals[a] > vals[b];
        return real_parts_less(vecs.col(a), vecs.col(b));
    });

    HermitianEigen out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for(Index j = 0; j < n; ++j) {
        out.values[j]     = vals[order[static_cast<std::size_t>(j)]];
        out.vectors.col(j) = vecs.col(order[static_cast<std::size_t>(j)]);
    }
    return out;
}

RVector hermitian_eigenvalues(const CMatrix &matrix) {
    if(matrix.rows() != matrix.cols()) throw InvalidInput("hermitian_eigenvalues: matrix is not square");
    if(matrix.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix, Eigen::EigenvaluesOnly);
    if(solver.info() != Eigen::Success) throw NumericalError("hermitian_eigenvalues: eigensolver did not converge");
    RVector v = solver.eigenvalues().reverse();
    return v;
}

double max_abs(const CMatrix &matrix) {
    return matrix.size() == 0 ? 0.0 : matrix.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const CMatrix &matrix) {
    if(matrix.rows() != matrix.cols()) return std::numeric_limits<double>::infinity();
    return max_abs(matrix - matrix.adjoint());
}

std::vector<double> clamp_unit_spectrum(const RVector &values, double tolerance) {
    std::vector<double> out(static_cast<std::size_t>(values.size()));
    for(Index i = 0; i < values.size(); ++i) {
        const double v = values[i];
        if(!(v >= -tolerance && v <= 1.0 + tolerance)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "eigenvalue " << v << " lies outside [0,1] beyond tolerance " << tolerance;
            throw NumericalError(msg.str());
        }
        out[static_cast<std::size_t>(i)] = std::clamp(v, 0.0, 1.0);
    }
    return out;
}

} // namespace fermisea
