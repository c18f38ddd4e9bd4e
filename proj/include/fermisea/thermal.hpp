#pragma once

// Finite-temperature quasi-free states rho = Z^-1 exp(-sum K_ij a^dag_i a_j).
// Inverse temperature and chemical potential are folded into the kernel K.

#include "fermisea/counting.hpp"
#include "fermisea/factorization.hpp"
#include "fermisea/types.hpp"

#include <vector>

namespace fermisea {

class ThermalSystem {
public:
    static constexpr double hermitian_tolerance = 1e-12;

    explicit ThermalSystem(CMatrix kernel);

    [[nodiscard]] Index          dim() const noexcept { return kernel_.rows(); }
    [[nodiscard]] const CMatrix &kernel() const noexcept { return kernel_; }

private:
    CMatrix kernel_;
};

/// Fermi function 1/(1+e^k), evaluated without overflow for large |k|.
[[nodiscard]] double fermi_occupation(double kappa) noexcept;

/// Single-particle occupation operator n = (1 + e^K)^{-1}; entry (i,j) equals
/// <a^dag_j a_i>.
[[nodiscard]] CMatrix occupation_operator(const ThermalSystem &sys);

/// Occupation operator compressed to the region, n_A = W^dag n W for an
/// orthonormal basis W of the region.
class RestrictedOccupation {
public:
    RestrictedOccupation(CMatrix matrix, OccupationSpectrum spectrum)
        : matrix_(std::move(matrix)), spectrum_(std::move(spectrum)) {}

    [[nodiscard]] Index                     size() const noexcept { return matrix_.rows(); }
    [[nodiscard]] const CMatrix            &matrix() const noexcept { return matrix_; }
    [[nodiscard]] const OccupationSpectrum &spectrum() const noexcept { return spectrum_; }

private:
    CMatrix            matrix_;
    OccupationSpectrum spectrum_;
};

[[nodiscard]] RestrictedOccupation restricted_occupation(const CMatrix &occupation, const RegionProjector &region);

[[nodiscard]] CountingReport thermal_report(const ThermalSystem &sys, const RegionProjector &region);

enum class EnergyKind { finite, plus_infinity, minus_infinity };

struct EffectiveEnergies {
    std::vector<double>     values; // ln((1-d)/d), +-inf where flagged
    std::vector<EnergyKind> kinds;
    [[nodiscard]] bool      all_finite() const;
};

/// Entanglement "energies" eps = ln((1-d)/d) of the restricted spectrum.
/// Pure occupations give flagged infinities unless `force_finite` is set, in
/// which case d is first clamped into [1e-300, 1 - 1e-16].
[[nodiscard]] EffectiveEnergies effective_energies(const RestrictedOccupation &occ, bool force_finite = false);
[[nodiscard]] EffectiveEnergies effective_energies(const OccupationSpectrum &spec, bool force_finite = false);

} // namespace fermisea
