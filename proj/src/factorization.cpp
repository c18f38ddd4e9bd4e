#include "fermisea/factorization.hpp"

#include "fermisea/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace fermisea {

OrbitalSet::OrbitalSet(CMatrix coeffs) : coeffs_(std::move(coeffs)) {
    const Index n = coeffs_.rows();
    const Index d = coeffs_.cols();
    if(n < 1 || n > d) {
        throw InvalidInput("OrbitalSet: need 1 <= N <= D, got N=" + std::to_string(n) + ", D=" + std::to_string(d));
    }
    const CMatrix gram = coeffs_ * coeffs_.adjoint();
    if(max_abs(gram - CMatrix::Identity(n, n)) > orthonormality_tolerance)
        throw InvalidInput("OrbitalSet: orbitals are not orthonormal");
}

OrbitalSet OrbitalSet::mixed(const CMatrix &unitary) const {
    if(unitary.rows() != n_occ() || unitary.cols() != n_occ())
        throw InvalidInput("OrbitalSet::mixed: unitary has the wrong size");
    return OrbitalSet(unitary * coeffs_);
}

RegionProjector RegionProjector::from_matrix(CMatrix projector) {
    if(projector.rows() != projector.cols()) throw InvalidInput("RegionProjector: matrix is not square");
    if(hermiticity_defect(projector) > hermitian_tolerance) throw InvalidInput("RegionProjector: matrix is not Hermitian");
    if(max_abs(projector * projector - projector) > idempotent_tolerance)
        throw InvalidInput("RegionProjector: matrix is not idempotent");
    RegionProjector p;
    p.dim_   = projector.rows();
    p.dense_ = std::move(projector);
    return p;
}

RegionProjector RegionProjector::from_sites(Index dim, std::vector<Index> sites) {
    if(dim < 0) throw InvalidInput("RegionProjector: negative dimension");
    std::sort(sites.begin(), sites.end());
    if(std::adjacent_find(sites.begin(), sites.end()) != sites.end())
        throw InvalidInput("RegionProjector: duplicate site index");
    if(!sites.empty() && (sites.front() < 0 || sites.back() >= dim))
        throw InvalidInput("RegionProjector: site index out of range");
    RegionProjector p;
    p.dim_   = dim;
    p.sites_ = std::move(sites);
    return p;
}

RegionProjector RegionProjector::full(Index dim) {
    std::vector<Index> all(static_cast<std::size_t>(dim));
    for(Index i = 0; i < dim; ++i) all[static_cast<std::size_t>(i)] = i;
    return from_sites(dim, std::move(all));
}

RegionProjector RegionProjector::zero(Index dim) {
    return from_sites(dim, {});
}

CMatrix RegionProjector::matrix() const {
    if(dense_) return *dense_;
    CMatrix p = CMatrix::Zero(dim_, dim_);
    for(Index s : sites_) p(s, s) = 1.0;
    return p;
}

RegionProjector RegionProjector::complement() const {
    if(dense_) {
        RegionProjector p;
        p.dim_   = dim_;
        p.dense_ = CMatrix(CMatrix::Identity(dim_, dim_) - *dense_);
        return p;
    }
    std::vector<Index> rest;
    rest.reserve(static_cast<std::size_t>(dim_) - sites_.size());
    auto it = sites_.begin();
    for(Index i = 0; i < dim_; ++i) {
        if(it != sites_.end() && *it == i)
            ++it;
        else
            rest.push_back(i);
    }
    return from_sites(dim_, std::move(rest));
}

CMatrix RegionProjector::project_rows(const CMatrix &rows) const {
    if(rows.cols() != dim_) throw InvalidInput("RegionProjector: dimension mismatch");
    if(dense_) return rows * dense_->transpose();
    CMatrix out = CMatrix::Zero(rows.rows(), rows.cols());
    for(Index s : sites_) out.col(s) = rows.col(s);
    return out;
}

CMatrix RegionProjector::orthonormal_basis() const {
    if(!dense_) {
        CMatrix w = CMatrix::Zero(dim_, static_cast<Index>(sites_.size()));
        for(Index j = 0; j < w.cols(); ++j) w(sites_[static_cast<std::size_t>(j)], j) = 1.0;
        return w;
    }
    const HermitianEigen eig  = hermitian_eigen(*dense_);
    Index                rank = 0;
    while(rank < eig.values.size() && eig.values[rank] > 0.5) ++rank;
    return eig.vectors.leftCols(rank);
}

OverlapMatrix::OverlapMatrix(CMatrix matrix) : matrix_(std::move(matrix)) {
    if(matrix_.rows() != matrix_.cols()) throw InvalidInput("OverlapMatrix: matrix is not square");
    if(hermiticity_defect(matrix_) > hermitian_tolerance) throw InvalidInput("OverlapMatrix: matrix is not Hermitian");
}

OccupationSpectrum OverlapMatrix::spectrum() const {
    return OccupationSpectrum::from_eigenvalues(hermitian_eigenvalues(matrix_));
}

OverlapMatrix overlap_matrix(const OrbitalSet &orbitals, const RegionProjector &region) {
    if(orbitals.dim() != region.dim()) {
        throw InvalidInput("overlap_matrix: orbital dimension " + std::to_string(orbitals.dim()) +
                           " does not match region dimension " + std::to_string(region.dim()));
    }
    const CMatrix projected = region.project_rows(orbitals.coeffs());
    CMatrix       m         = projected.conjugate() * projected.transpose();
    // Hermitian up to GEMM rounding; make it exact.
    m = 0.5 * (m + m.adjoint()).eval();
    return OverlapMatrix(std::move(m));
}

ModeFactorization factorize(const OrbitalSet &orbitals, const RegionProjector &region) {
    const OverlapMatrix  m   = overlap_matrix(orbitals, region);
    const HermitianEigen eig = hermitian_eigen(m.matrix());

    ModeFactorization f;
    f.d       = clamp_unit_spectrum(eig.values);
    f.unitary = eig.vectors.adjoint();

    const CMatrix &coeffs  = orbitals.coeffs();
    const CMatrix  inside  = region.project_rows(coeffs);
    const CMatrix  outside = coeffs - inside;
    // Row l of mixing^T * rows is sum_k c_l[k] rows.row(k).
    const CMatrix mixing_t = eig.vectors.transpose();
    f.modes_a              = mixing_t * inside;
    f.modes_b              = mixing_t * outside;

    const std::size_t n = f.d.size();
    f.a_defined.assign(n, false);
    f.b_defined.assign(n, false);
    for(std::size_t l = 0; l < n; ++l) {
        const Index  row = static_cast<Index>(l);
        const double d   = f.d[l];
        if(d > mode_threshold) {
            f.modes_a.row(row) /= std::sqrt(d);
            f.a_defined[l] = true;
        } else {
            f.modes_a.row(row).setZero();
        }
        if(1.0 - d > mode_threshold) {
            f.modes_b.row(row) /= std::sqrt(1.0 - d);
            f.b_defined[l] = true;
        } else {
            f.modes_b.row(row).setZero();
        }
    }
    return f;
}

std::vector<double> eigenvalues_of_rho_a(const OccupationSpectrum &d, int max_modes) {
    if(max_modes < 0 || max_modes > default_max_rho_modes)
        throw InvalidInput("eigenvalues_of_rho_a: max_modes must be in [0, 20]");
    if(d.size() > static_cast<std::size_t>(max_modes)) {
        throw InvalidInput("eigenvalues_of_rho_a: " + std::to_string(d.size()) + " modes exceed the limit of " +
                           std::to_string(max_modes));
    }
    std::vector<double> products{1.0};
    products.reserve(std::size_t{1} << d.size());
    for(double p : d) {
        const std::size_t half = products.size();
        products.resize(2 * half);
        for(std::size_t i = 0; i < half; ++i) {
            products[half + i] = products[i] * p;
            products[i] *= 1.0 - p;
        }
    }
    std::sort(products.begin(), products.end(), std::greater<>());
    return products;
}

} // namespace fermisea
