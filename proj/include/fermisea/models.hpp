#pragma once

// Model builders: the filled lowest Landau level restricted to a disc, and a
// Fermi sea of plane waves on a ring lattice restricted to a segment.
//
// LLL lengths are in units of sqrt(2) magnetic lengths, so the orbitals are
// z^k e^{-|z|^2/2} / sqrt(pi k!) and the occupation of mode k inside a disc of
// radius R is the regularized incomplete gamma P(k+1, R^2).

#include "fermisea/counting.hpp"
#include "fermisea/factorization.hpp"
#include "fermisea/types.hpp"

#include <span>
#include <vector>

namespace fermisea {

// Lowest Landau level disc

struct LLLDisc {
    double radius       = 1.0;
    Index  kmax         = 0;
    double epsilon_tail = 1e-12;

    /// Default truncation kmax = ceil(R^2 + 12 R + 50).
    [[nodiscard]] static LLLDisc with_radius(double radius);
    [[nodiscard]] static Index   default_kmax(double radius);
    /// Throws InvalidInput unless R > 0, kmax >= ceil(R^2) and epsilon_tail > 0.
    void validate() const;
};

/// d_k(R) = 1 - Gamma(k+1, R^2)/k!, the probability that mode k lies inside
/// the disc. R = 0 gives 0.
[[nodiscard]] double lll_occupation(Index k, double radius);

/// (d_0, ..., d_kmax). Throws NumericalError if d_kmax >= epsilon_tail.
[[nodiscard]] OccupationSpectrum lll_spectrum(const LLLDisc &disc);

struct ScanRow {
    double         parameter = 0.0; // R for the disc, segment length for the lattice
    CountingReport report;
    double         ratio = 0.0; // entropy / variance, NaN when the variance vanishes
};

[[nodiscard]] double                ratio_of(const CountingReport &report);
[[nodiscard]] std::vector<ScanRow> lll_scan(std::span<const double> radii);

/// Normalized radial density of the disc-restricted mode |k>_A,
/// p_k(r) = 2 r^{2k+1} e^{-r^2} / (k! d_k) on [0, R].
[[nodiscard]] std::vector<double> lll_mode_profile(Index k, double radius, std::span<const double> r_grid);

/// Unrestricted radial density 2 r^{2k+1} e^{-r^2} / k! at r.
[[nodiscard]] double lll_radial_density(Index k, double r);

/// Mean radius of p_k on [0, R] by composite Gauss-Legendre quadrature.
[[nodiscard]] double lll_mode_mean_radius(Index k, double radius);

/// Nodes per unit radius used by the radial quadrature.
inline constexpr int radial_nodes_per_unit = 64;

/// Explicit polar-grid discretization of the first kmax+1 LLL orbitals.
/// Each grid point is one basis site carrying its quadrature weight, so the
/// orbitals are orthonormal to quadrature accuracy and the disc is a site
/// subset.
struct DiscretizedDisc {
    OrbitalSet      orbitals;
    RegionProjector region;
    Index           radial_points  = 0;
    Index           angular_points = 0;
};

[[nodiscard]] DiscretizedDisc discretized_lll_disc(double radius, Index kmax, double outer_margin = 7.0);

// 1D ring lattice

struct LatticeRing {
    Index sites   = 1; // L
    Index filled  = 1; // N
    Index segment = 1; // ell

    void validate() const;
    /// Even N has no symmetric Fermi sea; momenta m = -N/2+1 .. N/2 are used.
    [[nodiscard]] bool convention_dependent() const noexcept { return filled % 2 == 0; }
};

/// ell x ell correlation matrix of the filled plane waves on the segment,
/// M_jk = (1/L) sum_m e^{2 pi i m (j-k)/L}; Hermitian Toeplitz.
[[nodiscard]] OverlapMatrix lattice_overlap(const LatticeRing &ring);

[[nodiscard]] std::vector<ScanRow> lattice_scan(Index sites, Index filled, std::span<const Index> segments);

} // namespace fermisea
