#pragma once

// Exact many-body brute force on small systems, used to check the closed
// forms without going through them.
//
// Conventions:
//  * Fock basis states are occupation bitmasks, bit j <-> site j (0-based),
//    |S> = c^dag_{s1} c^dag_{s2} ... c^dag_{sN} |0> with s1 < s2 < ... .
//  * c^dag_j and c_j carry the parity of the occupied sites below j.
//  * A partial trace first reorders modes as (region sites ascending,
//    complement sites ascending), picking up the permutation sign, and then
//    traces the complement. Region bit i <-> i-th region site.

#include "fermisea/counting.hpp"
#include "fermisea/factorization.hpp"
#include "fermisea/thermal.hpp"
#include "fermisea/types.hpp"

#include <cstdint>
#include <vector>

namespace fermisea::oracle {

inline constexpr int max_pure_sites    = 14;
inline constexpr int max_thermal_sites = 10;

class FockState {
public:
    FockState(int sites, CVector amplitudes);

    [[nodiscard]] int            sites() const noexcept { return sites_; }
    [[nodiscard]] const CVector &amplitudes() const noexcept { return amplitudes_; }

private:
    int     sites_;
    CVector amplitudes_;
};

/// Density matrix on the Fock space of `sites` modes (dimension 2^sites).
class DensityOperator {
public:
    DensityOperator(int sites, CMatrix matrix);

    [[nodiscard]] int            sites() const noexcept { return sites_; }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return matrix_; }

    /// Eigenvalues, descending.
    [[nodiscard]] std::vector<double> eigenvalues() const;

private:
    int     sites_;
    CMatrix matrix_;
};

[[nodiscard]] FockState slater_state(const OrbitalSet &orbitals);

/// <out| c^dag_i c_j |in> sign for in -> out, or 0 if the term vanishes.
[[nodiscard]] int hopping_sign(std::uint32_t in, int i, int j, std::uint32_t &out) noexcept;

/// Sign acquired by moving the region creators to the front of |mask>.
[[nodiscard]] int reorder_sign(std::uint32_t mask, std::uint32_t region_bits) noexcept;

/// Region sites are 0-based and must be distinct and in range.
[[nodiscard]] DensityOperator partial_trace(const FockState &state, const std::vector<int> &region_sites);
[[nodiscard]] DensityOperator partial_trace(const DensityOperator &rho, const std::vector<int> &region_sites);

struct OracleCounting {
    CountingReport      report;
    std::vector<double> distribution; // P(k), k = 0..sites
    std::vector<double> eigenvalues;  // of rho, descending
};

/// Entropy from the spectrum of rho; particle statistics from its diagonal.
[[nodiscard]] OracleCounting oracle_counting(const DensityOperator &rho);

/// Many-body matrix of sum_ij K_ij c^dag_i c_j.
[[nodiscard]] CMatrix quadratic_hamiltonian(const CMatrix &kernel);

/// Z^{-1} exp(-sum K_ij c^dag_i c_j) by dense diagonalization.
[[nodiscard]] DensityOperator gibbs_state(const ThermalSystem &sys);

/// C_ij = <c^dag_i c_j> = Tr(rho c^dag_i c_j).
[[nodiscard]] CMatrix correlation_matrix(const DensityOperator &rho);

// Comparison drivers

struct Deviation {
    double spectrum     = 0.0; // rho_A eigenvalues vs products of {d, 1-d}
    double entropy      = 0.0;
    double mean         = 0.0;
    double variance     = 0.0;
    double kappa4       = 0.0;
    double distribution = 0.0; // max |P_oracle(k) - P_closed(k)|
};

struct Tolerances {
    double spectrum     = 1e-8;
    double moments      = 1e-8;
    double distribution = 1e-10;

    [[nodiscard]] Tolerances scaled(double factor) const {
        return {spectrum * factor, moments * factor, distribution * factor};
    }
};

[[nodiscard]] bool within(const Deviation &dev, const Tolerances &tol) noexcept;
[[nodiscard]] double max_of(const Deviation &dev) noexcept;

/// Largest elementwise difference between two spectra after sorting both
/// descending and padding the shorter one with zeros.
[[nodiscard]] double spectrum_distance(std::vector<double> a, std::vector<double> b);

/// Brute-force ground state vs factorization/counting closed forms.
[[nodiscard]] Deviation pure_state_check(const OrbitalSet &orbitals, const std::vector<int> &region_sites);

/// Brute-force Gibbs state vs restricted-occupation closed forms.
[[nodiscard]] Deviation thermal_oracle_check(const ThermalSystem &sys, const std::vector<int> &region_sites);

} // namespace fermisea::oracle
