#pragma once

// Mode-pair factorization of a Fermi sea with respect to a subspace A of the
// single-particle space.
//
// Given occupied orbitals phi_1..phi_N and the projector P onto A, the Gram
// matrix M_ij = <P phi_i, P phi_j> (antilinear in the first slot) has spectrum
// d_l in [0,1]. Diagonalizing it mixes the orbitals into pairs (A_l, B_l) with
// A_l in A and B_l in the complement, such that the ground state is
//   prod_l ( sqrt(d_l) psi^dag(A_l) + sqrt(1-d_l) psi^dag(B_l) ) |0>
// and the reduced state on A is the product of diag(1-d_l, d_l).

#include "fermisea/counting.hpp"
#include "fermisea/types.hpp"

#include <optional>
#include <vector>

namespace fermisea {

/// Orthonormal occupied orbitals. Row i of `coeffs()` is phi_i in the
/// canonical basis of a D-dimensional single-particle space.
class OrbitalSet {
public:
    static constexpr double orthonormality_tolerance = 1e-10;

    explicit OrbitalSet(CMatrix coeffs);

    [[nodiscard]] Index          dim() const noexcept { return coeffs_.cols(); }
    [[nodiscard]] Index          n_occ() const noexcept { return coeffs_.rows(); }
    [[nodiscard]] const CMatrix &coeffs() const noexcept { return coeffs_; }

    /// Orbitals V * coeffs for an N x N unitary V; spans the same Fermi sea.
    [[nodiscard]] OrbitalSet mixed(const CMatrix &unitary) const;

private:
    CMatrix coeffs_;
};

/// Orthogonal projector onto a subspace of the single-particle space. Either a
/// dense Hermitian idempotent matrix, or (cheaply) a subset of basis sites.
class RegionProjector {
public:
    static constexpr double hermitian_tolerance  = 1e-12;
    static constexpr double idempotent_tolerance = 1e-10;

    [[nodiscard]] static RegionProjector from_matrix(CMatrix projector);
    /// `sites` are 0-based basis indices; duplicates are rejected.
    [[nodiscard]] static RegionProjector from_sites(Index dim, std::vector<Index> sites);
    [[nodiscard]] static RegionProjector full(Index dim);
    [[nodiscard]] static RegionProjector zero(Index dim);

    [[nodiscard]] Index dim() const noexcept { return dim_; }
    [[nodiscard]] bool  is_site_subset() const noexcept { return !dense_.has_value(); }
    /// Sorted site list; empty for a dense projector.
    [[nodiscard]] const std::vector<Index> &sites() const noexcept { return sites_; }

    [[nodiscard]] CMatrix         matrix() const;
    [[nodiscard]] RegionProjector complement() const;

    /// Project every row of `rows` (each a vector in the canonical basis).
    [[nodiscard]] CMatrix project_rows(const CMatrix &rows) const;

    /// D x m matrix with orthonormal columns spanning the region.
    [[nodiscard]] CMatrix orthonormal_basis() const;

private:
    RegionProjector() = default;

    Index                  dim_ = 0;
    std::vector<Index>     sites_;
    std::optional<CMatrix> dense_;
};

/// Hermitian overlap (Gram) matrix of the projected orbitals. Its eigenvalues
/// are occupation probabilities; the raw matrix is stored without clamping.
class OverlapMatrix {
public:
    static constexpr double hermitian_tolerance = 1e-12;

    explicit OverlapMatrix(CMatrix matrix);

    [[nodiscard]] Index          size() const noexcept { return matrix_.rows(); }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return matrix_; }

    /// Eigenvalues, descending, clamped to [0,1] (throws beyond 1e-10).
    [[nodiscard]] OccupationSpectrum spectrum() const;

private:
    CMatrix matrix_;
};

/// Modes with occupation (or vacancy) at or below this are left undefined.
inline constexpr double mode_threshold = 1e-8;

struct ModeFactorization {
    std::vector<double> d;       // descending, in [0,1]
    CMatrix             modes_a; // row l = A_l where a_defined[l]
    CMatrix             modes_b; // row l = B_l where b_defined[l]
    std::vector<bool>   a_defined;
    std::vector<bool>   b_defined;
    /// M = U^dagger diag(d) U. Column l of U^dagger holds the mixing
    /// coefficients of mode pair l.
    CMatrix unitary;

    [[nodiscard]] OccupationSpectrum spectrum() const { return OccupationSpectrum(d); }
};

[[nodiscard]] OverlapMatrix     overlap_matrix(const OrbitalSet &orbitals, const RegionProjector &region);
[[nodiscard]] ModeFactorization factorize(const OrbitalSet &orbitals, const RegionProjector &region);

inline constexpr int default_max_rho_modes = 20;

/// Spectrum of the reduced density matrix, the 2^n products of (1-d_i or d_i),
/// sorted descending.
[[nodiscard]] std::vector<double> eigenvalues_of_rho_a(const OccupationSpectrum &d,
                                                       int max_modes = default_max_rho_modes);

} // namespace fermisea
